// mbl: command-line front end for building type bases, weighting, classifying,
// scoring, editing and running editing experiments.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mbl/classifier.hpp"
#include "mbl/editor.hpp"
#include "mbl/exceptionality.hpp"
#include "mbl/harness.hpp"
#include "mbl/instance_model.hpp"
#include "mbl/synthetic.hpp"
#include "mbl/util.hpp"
#include "mbl/weighting.hpp"
#include "mbl/windowing.hpp"

namespace {

using namespace mbl;

FeatureWeights resolve_weights(const std::string& spec, const TypeBase& base) {
    if (spec == "auto") return information_gain(base);
    std::ifstream in(spec);
    if (!in) throw Error("cannot open weights " + spec);
    auto w = read_weights(in);
    if (w.size() != base.width()) throw Error("weights file does not match the base width");
    return w;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Memory-based learning with IB1-IG and instance-type editing"};
    app.require_subcommand(1);

    // ingest
    std::string lexicon_path, out_path;
    std::size_t width = 7;
    auto* ingest = app.add_subcommand("ingest", "Window a lexicon and write its type base");
    ingest->add_option("--lexicon", lexicon_path, "Letter-aligned lexicon")->required();
    ingest->add_option("--width", width, "Odd window width");
    ingest->add_option("--out", out_path, "Output type base")->required();

    // weights
    std::string base_path;
    auto* weights_cmd = app.add_subcommand("weights", "Print information gain per feature");
    weights_cmd->add_option("--base", base_path)->required();

    // stats
    auto* stats = app.add_subcommand("stats", "Memory accounting and minority ambiguities");
    stats->add_option("--base", base_path)->required();

    // classify
    std::string weights_spec = "auto", input_path;
    auto* classify_cmd = app.add_subcommand("classify", "Classify feature windows");
    classify_cmd->add_option("--base", base_path)->required();
    classify_cmd->add_option("--weights", weights_spec, "'auto' or a weights file");
    classify_cmd->add_option("--input", input_path, "One window per line")->required();

    // evaluate
    auto* evaluate_cmd = app.add_subcommand("evaluate", "Evaluate on a test lexicon");
    evaluate_cmd->add_option("--base", base_path)->required();
    evaluate_cmd->add_option("--weights", weights_spec, "'auto' or a weights file");
    evaluate_cmd->add_option("--lexicon", lexicon_path, "Test lexicon")->required();

    // score
    std::string criterion_name;
    std::uint64_t seed = 0;
    auto* score_cmd = app.add_subcommand("score", "Exceptionality score per type");
    score_cmd->add_option("--base", base_path)->required();
    score_cmd->add_option("--criterion", criterion_name)
        ->required()
        ->check(CLI::IsMember({"typicality", "cps", "fns", "random"}));
    score_cmd->add_option("--seed", seed);

    // edit
    double percent = 0.0;
    std::string direction_name;
    bool recompute = false;
    auto* edit_cmd = app.add_subcommand("edit", "Remove the most exceptional types");
    edit_cmd->add_option("--base", base_path)->required();
    edit_cmd->add_option("--criterion", criterion_name)
        ->required()
        ->check(CLI::IsMember({"typicality", "cps", "fns", "random"}));
    edit_cmd->add_option("--percent", percent)->required()->check(CLI::Range(0.0, 100.0));
    edit_cmd->add_option("--direction", direction_name, "atypical|typical|boundary|ascending");
    edit_cmd->add_option("--seed", seed);
    edit_cmd->add_option("--out", out_path)->required();

    // experiment
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> overrides;
    auto* exp = app.add_subcommand("experiment", "Run the editing grid");
    exp->add_option("--config", config_path, "key = value config file");
    auto add_override = [&](const std::string& flag, const std::string& key) {
        exp->add_option_function<std::string>(
            flag, [&overrides, key](const std::string& v) { overrides.emplace_back(key, v); });
    };
    add_override("--lexicon", "lexicon");
    add_override("--width", "width");
    add_override("--split-fraction", "split_fraction");
    add_override("--split-seed", "split_seed");
    add_override("--criteria", "criteria");
    add_override("--percents", "percents");
    add_override("--random-seed", "random_seed");
    add_override("--output", "output");
    add_override("--bases-dir", "bases_dir");
    exp->add_flag("--recompute-weights", recompute, "Recompute information gain after editing");

    // synth
    SyntheticConfig synth_cfg;
    auto* synth = app.add_subcommand("synth", "Generate a synthetic letter-aligned lexicon");
    synth->add_option("--words", synth_cfg.words);
    synth->add_option("--ambiguity", synth_cfg.ambiguity_rate, "Share of stress-variant words");
    synth->add_option("--morphemes", synth_cfg.morphemes);
    synth->add_option("--seed", synth_cfg.seed);
    synth->add_option("--out", out_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ingest) {
            const auto words = load_lexicon(lexicon_path);
            const auto tokens = generate_windows(words, width);
            const auto base = build_type_base(tokens);
            save_type_base(out_path, base);
            std::cerr << words.size() << " words, " << tokens.size() << " tokens, " << base.size()
                      << " types\n";
        } else if (*weights_cmd) {
            const auto base = load_type_base(base_path);
            const auto w = information_gain(base);
            write_weights(std::cout, w);
        } else if (*stats) {
            const auto base = load_type_base(base_path);
            const auto s = memory_stats(base);
            const auto minority = find_minority_ambiguities(base);
            std::uint64_t minority_tokens = 0;
            for (auto id : minority) minority_tokens += base[id].frequency;
            const auto pruned = memory_stats(base.token_total(), base.size() - minority.size(), base.width());
            std::cout << "tokens," << base.token_total() << '\n'
                      << "types," << base.size() << '\n'
                      << "classes," << base.classes().size() << '\n'
                      << "token_bytes," << s.token_bytes << '\n'
                      << "type_bytes," << s.type_bytes << '\n'
                      << "type_bytes_with_freq," << s.type_bytes_with_freq << '\n'
                      << "reduction_pct," << fixed2(s.reduction_pct) << '\n'
                      << "reduction_with_freq_pct," << fixed2(s.reduction_with_freq_pct) << '\n'
                      << "minority_types," << minority.size() << '\n'
                      << "minority_tokens," << minority_tokens << '\n'
                      << "reduction_without_minority_pct," << fixed2(pruned.reduction_pct) << '\n'
                      << "reduction_without_minority_with_freq_pct,"
                      << fixed2(pruned.reduction_with_freq_pct) << '\n';
        } else if (*classify_cmd) {
            const auto base = load_type_base(base_path);
            const auto w = resolve_weights(weights_spec, base);
            std::ifstream in(input_path);
            if (!in) throw Error("cannot open " + input_path);
            std::vector<FeatureVector> queries;
            std::string line;
            while (std::getline(in, line)) {
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (line.empty() || line.front() == '#') continue;
                queries.push_back(utf8_decode(line.substr(0, line.find('\t'))));
            }
            std::vector<MatchResult> results(queries.size());
            parallel_for(queries.size(), [&](std::size_t i) { results[i] = classify(queries[i], base, w); });
            for (std::size_t i = 0; i < queries.size(); ++i) {
                std::cout << utf8_encode(queries[i]) << '\t' << results[i].predicted << '\t'
                          << fixed6(results[i].distance) << '\n';
            }
        } else if (*evaluate_cmd) {
            const auto base = load_type_base(base_path);
            const auto w = resolve_weights(weights_spec, base);
            const auto words = load_lexicon(lexicon_path);
            const auto tokens = generate_windows(words, base.width());
            const auto r = evaluate(tokens, base, w);
            std::cout << "instances,errors,instance_error_pct,words,flawless,word_flawless_pct\n"
                      << r.instances << ',' << r.errors << ',' << fixed2(r.instance_error_pct) << ','
                      << r.words << ',' << r.flawless << ',' << fixed2(r.word_flawless_pct) << '\n';
        } else if (*score_cmd) {
            const auto base = load_type_base(base_path);
            const auto criterion = parse_criterion(criterion_name);
            const auto w = criterion == Criterion::cps || criterion == Criterion::fns
                               ? information_gain(base)
                               : FeatureWeights{};
            const auto scores = compute_scores(criterion, base, w, seed);
            for (const auto& s : scores) {
                std::cout << utf8_encode(base[s.type_id].features) << '\t' << base[s.type_id].label
                          << '\t' << fixed6(s.value) << '\n';
            }
        } else if (*edit_cmd) {
            const auto base = load_type_base(base_path);
            EditSpec spec;
            spec.criterion = parse_criterion(criterion_name);
            spec.direction = direction_name.empty() ? default_direction(spec.criterion)
                                                    : parse_direction(direction_name);
            spec.percent = percent;
            spec.seed = seed;
            const auto w = information_gain(base);
            const auto scores = compute_scores(spec.criterion, base, w, seed);
            const auto edited = edit(base, scores, spec);
            save_type_base(out_path, edited);
            std::cerr << "removed " << base.size() - edited.size() << " of " << base.size()
                      << " types\n";
        } else if (*exp) {
            ExperimentConfig cfg = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
            for (const auto& [key, value] : overrides) cfg.set(key, value);
            if (recompute) cfg.recompute_weights = true;
            const auto result = run_grid(cfg);
            if (cfg.output.empty()) write_csv(std::cout, result.rows);
        } else if (*synth) {
            const auto words = synthetic_lexicon(synth_cfg);
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw Error("cannot write " + out_path);
            out << "# synthetic lexicon: words=" << synth_cfg.words
                << " ambiguity=" << synth_cfg.ambiguity_rate << " seed=" << synth_cfg.seed << '\n';
            write_lexicon(out, words);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
