#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mbl/instance_model.hpp"
#include "mbl/weighting.hpp"

namespace mbl {

/// Weighted overlap distance: sum of gains over mismatching positions, added
/// in feature order. Two pairs with the same mismatch pattern therefore get
/// bit-identical distances.
double distance(const FeatureVector& x, const FeatureVector& y, const FeatureWeights& w);

struct BestMatchSet {
    double distance = 0.0;
    std::vector<TypeId> ids;  ///< ascending
};

/// Exhaustive scan for every type at the minimal distance.
BestMatchSet best_match_set(const FeatureVector& query, const TypeBase& base,
                            const FeatureWeights& w);

/// The member of `candidates` that outranks all others (see mbl::outranks).
TypeId select_winner(std::span<const TypeId> candidates, const TypeBase& base);

struct MatchResult {
    double distance = 0.0;
    std::vector<TypeId> best_set;
    TypeId winner = 0;
    ClassLabel predicted;
};

MatchResult classify(const FeatureVector& query, const TypeBase& base, const FeatureWeights& w);

/// Winner type id for each query, classified in parallel.
std::vector<TypeId> winners(std::span<const FeatureVector> queries, const TypeBase& base,
                            const FeatureWeights& w);

/// Predicted class per token, in input order.
std::vector<ClassLabel> predict(std::span<const InstanceToken> tokens, const TypeBase& base,
                                const FeatureWeights& w);

struct EvalReport {
    std::uint64_t instances = 0;
    std::uint64_t errors = 0;
    double instance_error_pct = 0.0;
    std::uint64_t words = 0;     ///< complete words only
    std::uint64_t flawless = 0;
    double word_flawless_pct = 0.0;
};

EvalReport evaluate(std::span<const InstanceToken> test, const TypeBase& base,
                    const FeatureWeights& w);

/// Scores precomputed predictions against the tokens' gold labels.
EvalReport score_predictions(std::span<const InstanceToken> test,
                             std::span<const ClassLabel> predicted);

}  // namespace mbl
