#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "mbl/instance_model.hpp"

namespace mbl {

/// Information-gain weight per feature position, in bits.
struct FeatureWeights {
    std::vector<double> gains;
    double h_db = 0.0;  ///< class entropy of the whole base

    std::size_t size() const noexcept { return gains.size(); }
};

inline constexpr double kGainTolerance = 1e-12;

/// Class entropy of the base with token-frequency-weighted class probabilities.
double database_entropy(const TypeBase& base);

/// Expected class entropy once the value at `feature` is known.
double feature_conditional_entropy(const TypeBase& base, std::size_t feature);

FeatureWeights information_gain(const TypeBase& base);

void write_weights(std::ostream& out, const FeatureWeights& w);
/// Reads "<index>\t<gain>" lines as produced by write_weights.
FeatureWeights read_weights(std::istream& in);

}  // namespace mbl
