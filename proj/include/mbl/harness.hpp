#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mbl/editor.hpp"
#include "mbl/windowing.hpp"

namespace mbl {

struct Ordering {
    Criterion criterion = Criterion::cps;
    Direction direction = Direction::ascending;
};

/// Parses one criteria-list entry. "typicality" expands to its three
/// orderings; "atypical", "typical" and "boundary" select one of them.
std::vector<Ordering> parse_orderings(std::string_view entry);

struct ExperimentConfig {
    std::string lexicon;
    std::size_t width = 7;
    double split_fraction = 0.9;
    std::uint64_t split_seed = 1;
    std::vector<Ordering> orderings = {
        {Criterion::typicality, Direction::atypical},
        {Criterion::typicality, Direction::typical},
        {Criterion::typicality, Direction::boundary},
        {Criterion::fns, Direction::ascending},
        {Criterion::cps, Direction::ascending},
        {Criterion::random, Direction::ascending},
    };
    std::vector<double> percents = {1, 2, 5, 10};
    std::uint64_t random_seed = 1;
    std::string output;          ///< CSV path; the run report goes to <output>.report
    std::string bases_dir;       ///< when set, every edited base is saved here
    bool recompute_weights = false;

    void validate() const;
    /// Sets one key as it would appear in a config file.
    void set(std::string_view key, std::string_view value);
    /// Normalised key = value listing, hashed into the run report.
    std::string canonical() const;
};

/// Reads `key = value` lines; '#' starts a comment.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

struct CorpusSplit {
    std::vector<WordRecord> train;
    std::vector<WordRecord> test;
};

/// Seeded word-level partition. round(fraction * words) words train, kept in
/// lexicon order; the remainder test. Both sides get at least one word.
CorpusSplit split_corpus(std::span<const WordRecord> words, double fraction, std::uint64_t seed);

struct ExperimentRow {
    std::string criterion;
    std::string direction;
    double percent = 0.0;
    std::size_t types_remaining = 0;
    double instance_error_pct = 0.0;
    double word_flawless_pct = 0.0;
    double relative_degradation_pct = 0.0;
    double memory_reduction_pct = 0.0;
    std::uint64_t base_checksum = 0;
};

struct ExperimentResult {
    std::vector<ExperimentRow> rows;  ///< baseline first
    std::string config_hash;
    std::size_t train_words = 0;
    std::size_t test_words = 0;
    std::uint64_t train_tokens = 0;
    std::uint64_t test_tokens = 0;
};

/// 100 * (err - baseline) / baseline. A zero baseline yields 0 when err is
/// also zero and +inf otherwise.
double relative_degradation(double err, double baseline_err);

ExperimentResult run_grid(const ExperimentConfig& config, std::span<const WordRecord> words);
/// Loads config.lexicon and, when config.output is set, writes the CSV and report.
ExperimentResult run_grid(const ExperimentConfig& config);

inline constexpr const char* kCsvHeader =
    "criterion,direction,percent,types_remaining,instance_error_pct,word_flawless_pct,"
    "relative_degradation_pct,memory_reduction_pct";

void write_csv(std::ostream& out, std::span<const ExperimentRow> rows);
std::string format_csv(std::span<const ExperimentRow> rows);
void write_report(std::ostream& out, const ExperimentConfig& config, const ExperimentResult& result);

}  // namespace mbl
