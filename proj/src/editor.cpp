#include "mbl/editor.hpp"

#include <algorithm>
#include <cmath>

#include "mbl/util.hpp"

namespace mbl {

std::string_view to_string(Direction d) {
    switch (d) {
        case Direction::atypical: return "atypical";
        case Direction::typical: return "typical";
        case Direction::boundary: return "boundary";
        case Direction::ascending: return "ascending";
    }
    return "?";
}

Direction parse_direction(std::string_view text) {
    if (text == "atypical") return Direction::atypical;
    if (text == "typical") return Direction::typical;
    if (text == "boundary") return Direction::boundary;
    if (text == "ascending") return Direction::ascending;
    throw Error("unknown direction '" + std::string(text) + "'");
}

Direction default_direction(Criterion c) {
    return c == Criterion::typicality ? Direction::atypical : Direction::ascending;
}

std::size_t removal_count(std::size_t type_count, double percent) {
    if (!(percent >= 0.0 && percent <= 100.0)) {
        throw Error("edit percentage must lie in [0,100], got " + std::to_string(percent));
    }
    // Multiply before dividing so whole percentages stay exact.
    const double n = std::floor(percent * static_cast<double>(type_count) / 100.0);
    return std::min(type_count, static_cast<std::size_t>(n));
}

std::vector<TypeId> rank_types(const TypeBase& base, std::span<const ExceptionalityScore> scores,
                               const EditSpec& spec) {
    const bool typicality_dir = spec.direction != Direction::ascending;
    if (typicality_dir != (spec.criterion == Criterion::typicality)) {
        throw Error("direction '" + std::string(to_string(spec.direction)) +
                    "' does not apply to criterion '" + std::string(to_string(spec.criterion)) + "'");
    }
    if (scores.size() != base.size()) {
        throw Error("scores cover " + std::to_string(scores.size()) + " types, base has " +
                    std::to_string(base.size()));
    }
    std::vector<double> key(base.size());
    std::vector<bool> seen(base.size(), false);
    for (const auto& s : scores) {
        if (s.type_id >= base.size() || seen[s.type_id]) {
            throw Error("scores must name every type exactly once");
        }
        if (s.criterion != spec.criterion) throw Error("scores were computed for another criterion");
        seen[s.type_id] = true;
        switch (spec.direction) {
            case Direction::typical: key[s.type_id] = -s.value; break;
            case Direction::boundary: key[s.type_id] = std::fabs(s.value - 1.0); break;
            default: key[s.type_id] = s.value; break;
        }
    }
    std::vector<TypeId> order(base.size());
    for (TypeId id = 0; id < order.size(); ++id) order[id] = id;
    std::stable_sort(order.begin(), order.end(),
                     [&](TypeId a, TypeId b) { return key[a] < key[b]; });
    return order;
}

TypeBase edit(const TypeBase& base, std::span<const ExceptionalityScore> scores,
              const EditSpec& spec) {
    const auto order = rank_types(base, scores, spec);
    const std::size_t n = removal_count(base.size(), spec.percent);
    return base.without(std::span<const TypeId>(order).first(n));
}

}  // namespace mbl
