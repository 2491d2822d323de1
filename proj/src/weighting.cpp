#include "mbl/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "mbl/util.hpp"

namespace mbl {

namespace {

// -sum p log2 p over non-zero counts, p = count / total, in the given order.
double entropy(const std::vector<std::uint64_t>& counts, std::uint64_t total) {
    if (total == 0) return 0.0;
    double h = 0.0;
    const auto denom = static_cast<double>(total);
    for (std::uint64_t c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / denom;
        h -= p * std::log2(p);
    }
    return h;
}

}  // namespace

double database_entropy(const TypeBase& base) {
    std::vector<std::uint64_t> counts;
    counts.reserve(base.classes().size());
    for (const auto& c : base.classes()) counts.push_back(c.tokens);
    return entropy(counts, base.token_total());
}

double feature_conditional_entropy(const TypeBase& base, std::size_t feature) {
    if (feature >= base.width()) {
        throw Error("feature index " + std::to_string(feature) + " out of range");
    }
    const std::size_t n_classes = base.classes().size();
    // value -> per-class token counts; std::map fixes the summation order.
    std::map<Symbol, std::vector<std::uint64_t>> by_value;
    for (TypeId id = 0; id < base.size(); ++id) {
        auto& counts = by_value[base[id].features[feature]];
        if (counts.empty()) counts.assign(n_classes, 0);
        counts[base.class_of(id)] += base[id].frequency;
    }
    const auto total = static_cast<double>(base.token_total());
    double h = 0.0;
    for (const auto& [value, counts] : by_value) {
        std::uint64_t subset = 0;
        for (auto c : counts) subset += c;
        h += entropy(counts, subset) * (static_cast<double>(subset) / total);
    }
    return h;
}

FeatureWeights information_gain(const TypeBase& base) {
    FeatureWeights w;
    w.h_db = database_entropy(base);
    w.gains.resize(base.width());
    parallel_for(base.width(), [&](std::size_t i) {
        const double cond = feature_conditional_entropy(base, i);
        const double raw = w.h_db - cond;
        if (raw < -kGainTolerance) {
            throw Error("negative information gain " + std::to_string(raw) + " at feature " +
                        std::to_string(i));
        }
        w.gains[i] = w.h_db - std::clamp(cond, 0.0, w.h_db);
    });
    return w;
}

void write_weights(std::ostream& out, const FeatureWeights& w) {
    std::ostringstream buf;
    buf << std::fixed << std::setprecision(6);
    for (std::size_t i = 0; i < w.gains.size(); ++i) buf << i << '\t' << w.gains[i] << '\n';
    out << buf.str();
}

FeatureWeights read_weights(std::istream& in) {
    FeatureWeights w;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty() || line.front() == '#') continue;
        std::istringstream fields(line);
        std::size_t index = 0;
        double gain = 0.0;
        if (!(fields >> index >> gain)) throw Error("malformed weights line: '" + line + "'");
        if (index != w.gains.size()) throw Error("weights must be listed in index order");
        if (gain < 0.0) throw Error("negative weight at feature " + std::to_string(index));
        w.gains.push_back(gain);
        w.h_db = std::max(w.h_db, gain);
    }
    return w;
}

}  // namespace mbl
