#include "mbl/exceptionality.hpp"

#include <cmath>

#include "distance_kernel.hpp"
#include "mbl/classifier.hpp"
#include "mbl/util.hpp"

namespace mbl {

std::string_view to_string(Criterion c) {
    switch (c) {
        case Criterion::typicality: return "typicality";
        case Criterion::cps: return "cps";
        case Criterion::fns: return "fns";
        case Criterion::random: return "random";
    }
    return "?";
}

Criterion parse_criterion(std::string_view text) {
    if (text == "typicality") return Criterion::typicality;
    if (text == "cps") return Criterion::cps;
    if (text == "fns") return Criterion::fns;
    if (text == "random") return Criterion::random;
    throw Error("unknown criterion '" + std::string(text) + "'");
}

namespace {

double zhang_from_mismatches(std::size_t mismatches, std::size_t n) {
    double sum = 0.0;
    for (std::size_t k = 0; k < mismatches; ++k) sum += 1.0;
    return std::sqrt(sum / static_cast<double>(n));
}

std::size_t mismatches(const FeatureVector& x, const FeatureVector& y) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < x.size(); ++i) k += x[i] != y[i];
    return k;
}

// 1 - zhang_distance, indexed by mismatch count.
std::vector<double> similarity_table(std::size_t n) {
    std::vector<double> table(n + 1);
    for (std::size_t k = 0; k <= n; ++k) table[k] = 1.0 - zhang_from_mismatches(k, n);
    return table;
}

TypicalityParts typicality_with(TypeId id, const TypeBase& base, const std::vector<double>& sim) {
    const auto types = base.types();
    const ClassId cls = base.class_of(id);
    double intra_sum = 0.0, inter_sum = 0.0;
    std::size_t family = 0, unrelated = 0;
    for (TypeId j = 0; j < types.size(); ++j) {
        const double s = sim[mismatches(types[id].features, types[j].features)];
        if (base.class_of(j) == cls) {
            intra_sum += s;
            ++family;
        } else {
            inter_sum += s;
            ++unrelated;
        }
    }
    if (unrelated == 0) throw Error("typicality undefined: no type of another class");
    TypicalityParts p;
    p.intra = intra_sum / static_cast<double>(family);
    p.inter = inter_sum / static_cast<double>(unrelated);
    p.typ = p.inter > 0.0 ? p.intra / p.inter : kTypicalitySentinel;
    return p;
}

// splitmix64 finaliser
std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

double zhang_distance(const FeatureVector& x, const FeatureVector& y) {
    if (x.size() != y.size() || x.empty()) throw Error("zhang_distance: length mismatch");
    return zhang_from_mismatches(mismatches(x, y), x.size());
}

TypicalityParts typicality(TypeId id, const TypeBase& base) {
    if (base.size() < 2) throw Error("typicality undefined: base needs at least two types");
    if (id >= base.size()) throw Error("type id out of range");
    return typicality_with(id, base, similarity_table(base.width()));
}

std::vector<TypicalityParts> typicality_all(const TypeBase& base) {
    if (base.size() < 2) throw Error("typicality undefined: base needs at least two types");
    if (base.classes().size() < 2) throw Error("typicality undefined: no type of another class");
    const auto sim = similarity_table(base.width());
    std::vector<TypicalityParts> out(base.size());
    parallel_for(base.size(), [&](std::size_t i) { out[i] = typicality_with(i, base, sim); });
    return out;
}

std::vector<ExceptionalityScore> typicality_scores(const TypeBase& base) {
    const auto parts = typicality_all(base);
    std::vector<ExceptionalityScore> out(parts.size());
    for (TypeId id = 0; id < parts.size(); ++id) out[id] = {id, Criterion::typicality, parts[id].typ};
    return out;
}

std::vector<PredictionTally> prediction_tallies(const TypeBase& base, const FeatureWeights& w) {
    std::vector<FeatureVector> queries;
    queries.reserve(base.size());
    for (const auto& t : base.types()) queries.push_back(t.features);
    const auto won_by = winners(queries, base, w);
    std::vector<PredictionTally> tally(base.size());
    for (TypeId x = 0; x < won_by.size(); ++x) {
        auto& t = tally[won_by[x]];
        ++t.selected;
        if (base.class_of(won_by[x]) == base.class_of(x)) ++t.correct;
    }
    return tally;
}

std::vector<ExceptionalityScore> class_prediction_strength(const TypeBase& base,
                                                           const FeatureWeights& w) {
    if (base.empty()) return {};
    const auto tally = prediction_tallies(base, w);
    std::vector<ExceptionalityScore> out(base.size());
    for (TypeId id = 0; id < tally.size(); ++id) {
        const auto& t = tally[id];
        const double v = t.selected == 0
                             ? 0.0
                             : static_cast<double>(t.correct) / static_cast<double>(t.selected);
        out[id] = {id, Criterion::cps, v};
    }
    return out;
}

std::vector<ExceptionalityScore> friendly_neighbourhood_size(const TypeBase& base,
                                                             const FeatureWeights& w) {
    if (!base.empty() && w.size() != base.width()) {
        throw Error("weights do not match the base width");
    }
    const auto types = base.types();
    std::vector<ExceptionalityScore> out(base.size());
    parallel_for(base.size(), [&](std::size_t x) {
        const ClassId cls = base.class_of(x);
        double enemy = std::numeric_limits<double>::infinity();
        for (TypeId j = 0; j < types.size(); ++j) {
            if (base.class_of(j) == cls) continue;
            const double d = detail::bounded_distance(types[x].features, types[j].features, w.gains, enemy);
            if (d < enemy) enemy = d;
        }
        std::uint64_t friends = 0;
        for (TypeId j = 0; j < types.size(); ++j) {
            if (j == x || base.class_of(j) != cls) continue;
            if (detail::bounded_distance(types[x].features, types[j].features, w.gains, enemy) < enemy) {
                ++friends;
            }
        }
        out[x] = {x, Criterion::fns, static_cast<double>(friends)};
    });
    return out;
}

std::vector<ExceptionalityScore> random_scores(const TypeBase& base, std::uint64_t seed) {
    std::vector<ExceptionalityScore> out(base.size());
    const std::uint64_t stream = mix(seed);
    for (TypeId id = 0; id < base.size(); ++id) {
        const std::uint64_t bits = mix(stream ^ mix(static_cast<std::uint64_t>(id)));
        out[id] = {id, Criterion::random, static_cast<double>(bits >> 11) * 0x1.0p-53};
    }
    return out;
}

std::vector<ExceptionalityScore> compute_scores(Criterion c, const TypeBase& base,
                                                const FeatureWeights& w, std::uint64_t seed) {
    switch (c) {
        case Criterion::typicality: return typicality_scores(base);
        case Criterion::cps: return class_prediction_strength(base, w);
        case Criterion::fns: return friendly_neighbourhood_size(base, w);
        case Criterion::random: return random_scores(base, seed);
    }
    throw Error("unknown criterion");
}

}  // namespace mbl
