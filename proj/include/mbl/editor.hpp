#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mbl/exceptionality.hpp"
#include "mbl/instance_model.hpp"

namespace mbl {

/// Which end of the score range counts as most exceptional. The three
/// typicality orderings only apply to typicality scores; every other
/// criterion removes its lowest values first.
enum class Direction { atypical, typical, boundary, ascending };

std::string_view to_string(Direction d);
Direction parse_direction(std::string_view text);

struct EditSpec {
    Criterion criterion = Criterion::cps;
    Direction direction = Direction::ascending;
    double percent = 0.0;
    std::uint64_t seed = 0;
};

/// Direction used when none is given: atypical for typicality, else ascending.
Direction default_direction(Criterion c);

/// floor(percent / 100 * type_count)
std::size_t removal_count(std::size_t type_count, double percent);

/// Type ids, most exceptional first. Equal scores keep type-id order.
std::vector<TypeId> rank_types(const TypeBase& base, std::span<const ExceptionalityScore> scores,
                               const EditSpec& spec);

/// Copy of `base` without the first removal_count() types of the ranking.
TypeBase edit(const TypeBase& base, std::span<const ExceptionalityScore> scores,
              const EditSpec& spec);

}  // namespace mbl
