#include "mbl/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "mbl/classifier.hpp"
#include "mbl/random.hpp"
#include "mbl/util.hpp"
#include "mbl/weighting.hpp"

namespace mbl {

namespace {

std::uint64_t parse_u64(std::string_view key, std::string_view text) {
    std::uint64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw Error("config: '" + std::string(key) + "' expects an unsigned integer, got '" +
                    std::string(text) + "'");
    }
    return v;
}

double parse_double(std::string_view key, std::string_view text) {
    // std::from_chars for double is missing from older libstdc++.
    const std::string s(text);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw Error("config: '" + std::string(key) + "' expects a number, got '" + s + "'");
    }
    return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw Error("config: '" + std::string(key) + "' expects true/false");
}

std::string fmt2(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    // Avoid "-0.00" for tiny negative values.
    if (std::string_view(buf) == "-0.00") return "0.00";
    return buf;
}

std::string ordering_name(const Ordering& o) {
    return o.criterion == Criterion::typicality ? std::string(to_string(o.direction))
                                                : std::string(to_string(o.criterion));
}

}  // namespace

std::vector<Ordering> parse_orderings(std::string_view entry) {
    if (entry == "typicality") {
        return {{Criterion::typicality, Direction::atypical},
                {Criterion::typicality, Direction::typical},
                {Criterion::typicality, Direction::boundary}};
    }
    if (entry == "atypical" || entry == "typical" || entry == "boundary") {
        return {{Criterion::typicality, parse_direction(entry)}};
    }
    return {{parse_criterion(entry), Direction::ascending}};
}

void ExperimentConfig::validate() const {
    if (!(split_fraction > 0.0 && split_fraction < 1.0)) {
        throw Error("config: split_fraction must lie in (0,1)");
    }
    if (width == 0 || width % 2 == 0) throw Error("config: width must be odd and positive");
    if (orderings.empty()) throw Error("config: no criteria given");
    for (double p : percents) {
        if (!(p > 0.0 && p <= 100.0)) throw Error("config: percents must lie in (0,100]");
    }
}

void ExperimentConfig::set(std::string_view key, std::string_view raw) {
    const std::string_view value = trim(raw);
    if (key == "lexicon") {
        lexicon = value;
    } else if (key == "width") {
        width = parse_u64(key, value);
    } else if (key == "split_fraction") {
        split_fraction = parse_double(key, value);
    } else if (key == "split_seed") {
        split_seed = parse_u64(key, value);
    } else if (key == "random_seed") {
        random_seed = parse_u64(key, value);
    } else if (key == "criteria") {
        orderings.clear();
        for (auto item : split(value, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            for (const auto& o : parse_orderings(item)) orderings.push_back(o);
        }
    } else if (key == "percents") {
        percents.clear();
        for (auto item : split(value, ',')) {
            item = trim(item);
            if (!item.empty()) percents.push_back(parse_double(key, item));
        }
    } else if (key == "output") {
        output = value;
    } else if (key == "bases_dir") {
        bases_dir = value;
    } else if (key == "recompute_weights") {
        recompute_weights = parse_bool(key, value);
    } else {
        throw Error("config: unknown key '" + std::string(key) + "'");
    }
}

std::string ExperimentConfig::canonical() const {
    std::ostringstream out;
    out << "lexicon = " << lexicon << '\n'
        << "width = " << width << '\n'
        << "split_fraction = " << std::setprecision(17) << split_fraction << '\n'
        << "split_seed = " << split_seed << '\n'
        << "criteria = ";
    for (std::size_t i = 0; i < orderings.size(); ++i) {
        out << (i ? "," : "") << ordering_name(orderings[i]);
    }
    out << "\npercents = ";
    for (std::size_t i = 0; i < percents.size(); ++i) out << (i ? "," : "") << fmt2(percents[i]);
    out << "\nrandom_seed = " << random_seed << '\n'
        << "recompute_weights = " << (recompute_weights ? "true" : "false") << '\n';
    return out.str();
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view text = line;
        if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) {
            throw Error("config line " + std::to_string(line_no) + ": expected key = value");
        }
        cfg.set(trim(text.substr(0, eq)), text.substr(eq + 1));
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config " + path);
    return parse_config(in);
}

CorpusSplit split_corpus(std::span<const WordRecord> words, double fraction, std::uint64_t seed) {
    if (words.size() < 2) throw Error("split_corpus: need at least two words");
    if (!(fraction > 0.0 && fraction < 1.0)) throw Error("split_corpus: fraction must lie in (0,1)");
    const std::size_t n = words.size();
    auto train_n = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
    train_n = std::clamp<std::size_t>(train_n, 1, n - 1);

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    Rng rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);

    std::vector<bool> in_train(n, false);
    for (std::size_t i = 0; i < train_n; ++i) in_train[order[i]] = true;
    CorpusSplit split;
    split.train.reserve(train_n);
    split.test.reserve(n - train_n);
    for (std::size_t i = 0; i < n; ++i) (in_train[i] ? split.train : split.test).push_back(words[i]);
    return split;
}

double relative_degradation(double err, double baseline_err) {
    if (baseline_err > 0.0) return 100.0 * (err - baseline_err) / baseline_err;
    return err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

ExperimentResult run_grid(const ExperimentConfig& config, std::span<const WordRecord> words) {
    config.validate();
    const auto split = split_corpus(words, config.split_fraction, config.split_seed);
    const auto train_tokens = generate_windows(split.train, config.width);
    const auto test_tokens = generate_windows(split.test, config.width);
    const TypeBase base = build_type_base(train_tokens);
    const FeatureWeights weights = information_gain(base);

    ExperimentResult result;
    result.config_hash = hex64(fnv1a(config.canonical()));
    result.train_words = split.train.size();
    result.test_words = split.test.size();
    result.train_tokens = base.token_total();
    result.test_tokens = test_tokens.size();

    if (!config.bases_dir.empty()) std::filesystem::create_directories(config.bases_dir);
    auto save = [&](const TypeBase& b, const std::string& name) {
        if (!config.bases_dir.empty()) {
            save_type_base((std::filesystem::path(config.bases_dir) / (name + ".tb")).string(), b);
        }
    };

    const EvalReport full = evaluate(test_tokens, base, weights);
    ExperimentRow baseline;
    baseline.criterion = "none";
    baseline.direction = "none";
    baseline.types_remaining = base.size();
    baseline.instance_error_pct = full.instance_error_pct;
    baseline.word_flawless_pct = full.word_flawless_pct;
    baseline.memory_reduction_pct = memory_stats(base).reduction_pct;
    baseline.base_checksum = checksum(base);
    result.rows.push_back(baseline);
    save(base, "baseline");

    std::map<Criterion, std::vector<ExceptionalityScore>> score_cache;
    for (const auto& ordering : config.orderings) {
        auto it = score_cache.find(ordering.criterion);
        if (it == score_cache.end()) {
            it = score_cache
                     .emplace(ordering.criterion,
                              compute_scores(ordering.criterion, base, weights, config.random_seed))
                     .first;
        }
        for (double percent : config.percents) {
            EditSpec spec{ordering.criterion, ordering.direction, percent, config.random_seed};
            const TypeBase edited = edit(base, it->second, spec);

            EvalReport report;
            if (edited.empty()) {
                report = score_predictions(test_tokens,
                                           std::vector<ClassLabel>(test_tokens.size()));
            } else if (config.recompute_weights) {
                report = evaluate(test_tokens, edited, information_gain(edited));
            } else {
                report = evaluate(test_tokens, edited, weights);
            }

            ExperimentRow row;
            row.criterion = to_string(ordering.criterion);
            row.direction = to_string(ordering.direction);
            row.percent = percent;
            row.types_remaining = edited.size();
            row.instance_error_pct = report.instance_error_pct;
            row.word_flawless_pct = report.word_flawless_pct;
            row.relative_degradation_pct =
                relative_degradation(report.instance_error_pct, full.instance_error_pct);
            row.memory_reduction_pct =
                memory_stats(base.token_total(), edited.size(), base.width()).reduction_pct;
            row.base_checksum = checksum(edited);
            result.rows.push_back(row);
            save(edited, row.criterion + "-" + row.direction + "-" + fmt2(percent));
        }
    }
    return result;
}

ExperimentResult run_grid(const ExperimentConfig& config) {
    if (config.lexicon.empty()) throw Error("config: no lexicon given");
    const auto words = load_lexicon(config.lexicon);
    auto result = run_grid(config, words);
    if (!config.output.empty()) {
        {
            std::ofstream csv(config.output, std::ios::binary);
            if (!csv) throw Error("cannot write " + config.output);
            write_csv(csv, result.rows);
        }
        std::ofstream report(config.output + ".report", std::ios::binary);
        if (!report) throw Error("cannot write " + config.output + ".report");
        write_report(report, config, result);
    }
    return result;
}

void write_csv(std::ostream& out, std::span<const ExperimentRow> rows) {
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.criterion << ',' << r.direction << ',' << fmt2(r.percent) << ','
            << r.types_remaining << ',' << fmt2(r.instance_error_pct) << ','
            << fmt2(r.word_flawless_pct) << ',' << fmt2(r.relative_degradation_pct) << ','
            << fmt2(r.memory_reduction_pct) << '\n';
    }
}

std::string format_csv(std::span<const ExperimentRow> rows) {
    std::ostringstream out;
    write_csv(out, rows);
    return out.str();
}

void write_report(std::ostream& out, const ExperimentConfig& config, const ExperimentResult& result) {
    out << "config_hash = " << result.config_hash << '\n'
        << "split_seed = " << config.split_seed << '\n'
        << "random_seed = " << config.random_seed << '\n'
        << "train_words = " << result.train_words << '\n'
        << "test_words = " << result.test_words << '\n'
        << "train_tokens = " << result.train_tokens << '\n'
        << "test_tokens = " << result.test_tokens << '\n';
    for (const auto& r : result.rows) {
        out << "base " << r.criterion << ',' << r.direction << ',' << fmt2(r.percent)
            << " checksum = " << hex64(r.base_checksum) << '\n';
    }
}

}  // namespace mbl
