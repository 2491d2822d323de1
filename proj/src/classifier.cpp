#include "mbl/classifier.hpp"

#include <limits>
#include <map>

#include "distance_kernel.hpp"
#include "mbl/util.hpp"

namespace mbl {

namespace {

void check_dims(std::size_t query_width, const TypeBase& base, const FeatureWeights& w) {
    if (w.size() != base.width()) {
        throw Error("weights cover " + std::to_string(w.size()) + " features but base has " +
                    std::to_string(base.width()));
    }
    if (query_width != base.width()) {
        throw Error("query has " + std::to_string(query_width) + " features but base has " +
                    std::to_string(base.width()));
    }
}

}  // namespace

double distance(const FeatureVector& x, const FeatureVector& y, const FeatureWeights& w) {
    if (x.size() != y.size() || x.size() != w.size()) {
        throw Error("distance: length mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) sum += w.gains[i];
    }
    return sum;
}

BestMatchSet best_match_set(const FeatureVector& query, const TypeBase& base,
                            const FeatureWeights& w) {
    if (base.empty()) throw Error("best_match_set: empty type base");
    check_dims(query.size(), base, w);
    BestMatchSet best;
    best.distance = std::numeric_limits<double>::infinity();
    const auto types = base.types();
    for (TypeId id = 0; id < types.size(); ++id) {
        const double d = detail::bounded_distance(query, types[id].features, w.gains, best.distance);
        if (d < best.distance) {
            best.distance = d;
            best.ids.clear();
            best.ids.push_back(id);
        } else if (d == best.distance) {
            best.ids.push_back(id);
        }
    }
    return best;
}

TypeId select_winner(std::span<const TypeId> candidates, const TypeBase& base) {
    if (candidates.empty()) throw Error("select_winner: empty candidate set");
    TypeId best = candidates.front();
    for (TypeId id : candidates.subspan(1)) {
        if (outranks(base, id, best)) best = id;
    }
    return best;
}

MatchResult classify(const FeatureVector& query, const TypeBase& base, const FeatureWeights& w) {
    auto match = best_match_set(query, base, w);
    MatchResult r;
    r.distance = match.distance;
    r.winner = select_winner(match.ids, base);
    r.best_set = std::move(match.ids);
    r.predicted = base[r.winner].label;
    return r;
}

std::vector<TypeId> winners(std::span<const FeatureVector> queries, const TypeBase& base,
                            const FeatureWeights& w) {
    std::vector<TypeId> out(queries.size());
    parallel_for(queries.size(), [&](std::size_t i) {
        out[i] = select_winner(best_match_set(queries[i], base, w).ids, base);
    });
    return out;
}

std::vector<ClassLabel> predict(std::span<const InstanceToken> tokens, const TypeBase& base,
                                const FeatureWeights& w) {
    std::vector<ClassLabel> out(tokens.size());
    parallel_for(tokens.size(), [&](std::size_t i) {
        out[i] = classify(tokens[i].features, base, w).predicted;
    });
    return out;
}

EvalReport score_predictions(std::span<const InstanceToken> test,
                             std::span<const ClassLabel> predicted) {
    if (predicted.size() != test.size()) throw Error("prediction count differs from test size");
    struct WordTally {
        std::vector<std::size_t> positions;
        bool all_correct = true;
        bool ends_word = false;
    };
    std::map<std::size_t, WordTally> words;
    EvalReport r;
    for (std::size_t i = 0; i < test.size(); ++i) {
        const auto& tok = test[i];
        const bool correct = predicted[i] == tok.label;
        ++r.instances;
        if (!correct) ++r.errors;
        auto& tally = words[tok.word_id];
        tally.positions.push_back(tok.position);
        tally.all_correct = tally.all_correct && correct;
        const std::size_t right = tok.features.size() / 2 + 1;
        if (right >= tok.features.size() || tok.features[right] == kPadding) {
            tally.ends_word = true;
        }
    }
    for (auto& [id, tally] : words) {
        // A word counts only if all of its positions 0..m-1 are present.
        std::vector<bool> seen(tally.positions.size(), false);
        bool complete = tally.ends_word;
        for (auto p : tally.positions) {
            if (p >= seen.size() || seen[p]) {
                complete = false;
                break;
            }
            seen[p] = true;
        }
        if (!complete) continue;
        ++r.words;
        if (tally.all_correct) ++r.flawless;
    }
    if (r.instances > 0) {
        r.instance_error_pct = 100.0 * static_cast<double>(r.errors) / static_cast<double>(r.instances);
    }
    if (r.words > 0) {
        r.word_flawless_pct = 100.0 * static_cast<double>(r.flawless) / static_cast<double>(r.words);
    }
    return r;
}

EvalReport evaluate(std::span<const InstanceToken> test, const TypeBase& base,
                    const FeatureWeights& w) {
    const auto predicted = predict(test, base, w);
    return score_predictions(test, predicted);
}

}  // namespace mbl
