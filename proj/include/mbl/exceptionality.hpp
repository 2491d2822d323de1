#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "mbl/instance_model.hpp"
#include "mbl/weighting.hpp"

namespace mbl {

enum class Criterion { typicality, cps, fns, random };

std::string_view to_string(Criterion c);
Criterion parse_criterion(std::string_view text);

struct ExceptionalityScore {
    TypeId type_id = 0;
    Criterion criterion = Criterion::random;
    double value = 0.0;
};

/// Typicality when a type has no similarity at all to the other classes.
/// Ranks as maximally typical.
inline constexpr double kTypicalitySentinel = std::numeric_limits<double>::infinity();

struct TypicalityParts {
    double intra = 0.0;
    double inter = 0.0;
    double typ = 0.0;
};

/// Unweighted overlap distance normalised to [0,1]: sqrt(mismatches / n).
double zhang_distance(const FeatureVector& x, const FeatureVector& y);

/// Intra- over inter-concept similarity of one type. The family includes the
/// type itself. Frequencies are ignored. Throws Error("typicality undefined")
/// when no type of another class exists.
TypicalityParts typicality(TypeId id, const TypeBase& base);
std::vector<TypicalityParts> typicality_all(const TypeBase& base);

struct PredictionTally {
    std::uint64_t selected = 0;  ///< times chosen as the winning match
    std::uint64_t correct = 0;   ///< ... with the query's class
};

/// Every type in the base is classified against the full base (itself
/// included); each classification is credited to the single winning type.
std::vector<PredictionTally> prediction_tallies(const TypeBase& base, const FeatureWeights& w);

/// correct/selected per type, 0.0 for types that are never selected.
std::vector<ExceptionalityScore> class_prediction_strength(const TypeBase& base,
                                                           const FeatureWeights& w);

/// Number of same-class types strictly closer (weighted distance) than the
/// nearest type of another class.
std::vector<ExceptionalityScore> friendly_neighbourhood_size(const TypeBase& base,
                                                             const FeatureWeights& w);

/// Seeded value in [0,1) per type, a pure function of (seed, type id).
std::vector<ExceptionalityScore> random_scores(const TypeBase& base, std::uint64_t seed);

std::vector<ExceptionalityScore> typicality_scores(const TypeBase& base);

std::vector<ExceptionalityScore> compute_scores(Criterion c, const TypeBase& base,
                                                const FeatureWeights& w, std::uint64_t seed = 0);

}  // namespace mbl
