#pragma once

#include <cstddef>
#include <span>

#include "mbl/instance_model.hpp"

namespace mbl::detail {

// Partial sums only grow, so once one exceeds `bound` the full distance is
// strictly greater than `bound` and the scan can stop early.
inline double bounded_distance(const FeatureVector& x, const FeatureVector& y,
                               std::span<const double> gains, double bound) {
    double sum = 0.0;
    const std::size_t n = gains.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] != y[i]) {
            sum += gains[i];
            if (sum > bound) return sum;
        }
    }
    return sum;
}

}  // namespace mbl::detail
