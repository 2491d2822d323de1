#pragma once
// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the data types: no early-abandon scans,
// no class-id tables, no cached orderings.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mbl/instance_model.hpp"
#include "mbl/random.hpp"

namespace oracle {

using mbl::ClassLabel;
using mbl::FeatureVector;
using mbl::InstanceType;
using mbl::TypeBase;
using mbl::TypeId;

inline std::uint64_t class_total(const TypeBase& base, const ClassLabel& label) {
    std::uint64_t n = 0;
    for (const auto& t : base.types()) {
        if (t.label == label) n += t.frequency;
    }
    return n;
}

// Smaller key wins: (-frequency, -class tokens, label, features).
inline auto rank_key(const TypeBase& base, TypeId id) {
    const auto& t = base[id];
    return std::make_tuple(-static_cast<long double>(t.frequency),
                           -static_cast<long double>(class_total(base, t.label)), t.label,
                           t.features);
}

inline double weighted_distance(const FeatureVector& x, const FeatureVector& y,
                                const std::vector<double>& gains) {
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x[i] == y[i] ? 0.0 : gains[i];
    return d;
}

struct Match {
    double distance;
    std::vector<TypeId> best;
    TypeId winner;
};

inline Match classify(const FeatureVector& q, const TypeBase& base, const std::vector<double>& gains) {
    std::vector<double> d(base.size());
    for (TypeId id = 0; id < base.size(); ++id) d[id] = weighted_distance(q, base[id].features, gains);
    const double best = *std::min_element(d.begin(), d.end());
    Match m{best, {}, 0};
    for (TypeId id = 0; id < base.size(); ++id) {
        if (d[id] == best) m.best.push_back(id);
    }
    m.winner = m.best.front();
    for (TypeId id : m.best) {
        if (rank_key(base, id) < rank_key(base, m.winner)) m.winner = id;
    }
    return m;
}

inline std::set<TypeId> minority(const TypeBase& base) {
    std::set<TypeId> out;
    for (TypeId t = 0; t < base.size(); ++t) {
        for (TypeId u = 0; u < base.size(); ++u) {
            if (u != t && base[u].features == base[t].features && base[u].label != base[t].label &&
                rank_key(base, u) < rank_key(base, t)) {
                out.insert(t);
            }
        }
    }
    return out;
}

struct Cps {
    std::vector<std::uint64_t> a, b;
    std::vector<double> value;
};

inline Cps cps(const TypeBase& base, const std::vector<double>& gains) {
    Cps c{std::vector<std::uint64_t>(base.size()), std::vector<std::uint64_t>(base.size()),
          std::vector<double>(base.size())};
    for (TypeId x = 0; x < base.size(); ++x) {
        const TypeId y = classify(base[x].features, base, gains).winner;
        ++c.a[y];
        if (base[y].label == base[x].label) ++c.b[y];
    }
    for (TypeId y = 0; y < base.size(); ++y) {
        c.value[y] = c.a[y] ? static_cast<double>(c.b[y]) / static_cast<double>(c.a[y]) : 0.0;
    }
    return c;
}

// Ranks all other types by distance and walks the ranking until the first
// differently-labelled type; friends tied with it do not count.
inline std::vector<double> fns(const TypeBase& base, const std::vector<double>& gains) {
    std::vector<double> out(base.size());
    for (TypeId x = 0; x < base.size(); ++x) {
        std::vector<std::pair<double, bool>> ranking;
        for (TypeId j = 0; j < base.size(); ++j) {
            if (j == x) continue;
            ranking.emplace_back(weighted_distance(base[x].features, base[j].features, gains),
                                 base[j].label == base[x].label);
        }
        // friends sort after enemies at equal distance
        std::sort(ranking.begin(), ranking.end(), [](const auto& p, const auto& q) {
            if (p.first != q.first) return p.first < q.first;
            return !p.second && q.second;
        });
        std::size_t count = 0;
        for (const auto& [d, same] : ranking) {
            if (!same) break;
            ++count;
        }
        out[x] = static_cast<double>(count);
    }
    return out;
}

inline double zhang(const FeatureVector& x, const FeatureVector& y) {
    double sq = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double delta = x[i] == y[i] ? 0.0 : 1.0;
        sq += (1.0 * delta) * (1.0 * delta);
    }
    return std::sqrt(sq / static_cast<double>(x.size()));
}

struct Typicality {
    double intra, inter, typ;
};

inline Typicality typicality(const TypeBase& base, TypeId x) {
    double intra = 0.0, inter = 0.0;
    int fam = 0, unr = 0;
    for (TypeId j = 0; j < base.size(); ++j) {
        const double s = 1.0 - zhang(base[x].features, base[j].features);
        if (base[j].label == base[x].label) {
            intra += s;
            ++fam;
        } else {
            inter += s;
            ++unr;
        }
    }
    Typicality t{intra / fam, inter / unr, 0.0};
    t.typ = t.inter > 0 ? t.intra / t.inter : std::numeric_limits<double>::infinity();
    return t;
}

// Entropy from an explicit token list.
inline double entropy_of(const std::vector<ClassLabel>& labels) {
    std::map<ClassLabel, double> counts;
    for (const auto& l : labels) counts[l] += 1.0;
    double h = 0.0;
    for (const auto& [l, c] : counts) {
        const double p = c / static_cast<double>(labels.size());
        h -= p * std::log2(p);
    }
    return h;
}

// Information gain computed over the expanded token multiset.
inline std::vector<double> gains(const TypeBase& base) {
    std::vector<ClassLabel> all;
    for (const auto& t : base.types()) {
        for (std::uint64_t k = 0; k < t.frequency; ++k) all.push_back(t.label);
    }
    const double h = entropy_of(all);
    std::vector<double> g(base.width());
    for (std::size_t i = 0; i < base.width(); ++i) {
        std::map<char32_t, std::vector<ClassLabel>> parts;
        for (const auto& t : base.types()) {
            for (std::uint64_t k = 0; k < t.frequency; ++k) parts[t.features[i]].push_back(t.label);
        }
        double cond = 0.0;
        for (const auto& [v, labels] : parts) {
            cond += entropy_of(labels) * static_cast<double>(labels.size()) / static_cast<double>(all.size());
        }
        g[i] = h - cond;
    }
    return g;
}

}  // namespace oracle

namespace gen {

using mbl::ClassLabel;
using mbl::FeatureVector;
using mbl::InstanceType;
using mbl::TypeBase;

struct BaseShape {
    std::size_t max_types = 200;
    std::size_t max_width = 5;
    std::size_t max_alphabet = 6;
    std::size_t max_classes = 5;
    std::uint64_t max_frequency = 5;
    double twin_rate = 0.15;  // chance that a new type copies an earlier feature vector
};

inline mbl::FeatureVector random_vector(mbl::Rng& rng, std::size_t width, std::size_t alphabet) {
    mbl::FeatureVector v;
    for (std::size_t i = 0; i < width; ++i) v.push_back(U'a' + static_cast<char32_t>(rng.below(alphabet)));
    return v;
}

// Random base with deliberately planted identical-feature twins and
// frequency ties.
inline TypeBase random_base(mbl::Rng& rng, const BaseShape& shape = {}) {
    const std::size_t width = 1 + rng.below(shape.max_width);
    const std::size_t alphabet = 2 + rng.below(shape.max_alphabet - 1);
    const std::size_t classes = 2 + rng.below(shape.max_classes - 1);
    const std::size_t target = 2 + rng.below(shape.max_types - 1);
    std::map<std::pair<FeatureVector, ClassLabel>, std::uint64_t> types;
    std::vector<FeatureVector> seen;
    for (std::size_t k = 0; k < target; ++k) {
        FeatureVector f = (!seen.empty() && rng.chance(shape.twin_rate))
                              ? seen[rng.below(seen.size())]
                              : random_vector(rng, width, alphabet);
        seen.push_back(f);
        ClassLabel label = "C" + std::to_string(rng.below(classes));
        types[{f, label}] = 1 + rng.below(shape.max_frequency);
    }
    std::vector<InstanceType> list;
    for (auto& [key, freq] : types) list.push_back({key.first, key.second, freq});
    return TypeBase(width, std::move(list));
}

}  // namespace gen
