#pragma once

#include <cstddef>
#include <optional>

#include "affsel/affectance_matrix.h"
#include "affsel/schedule.h"

namespace affsel {

inline constexpr std::size_t kBruteForceMaxN = 10;

// Shortest affectance-selective schedule with at most `max_slots` slots, by
// exhaustive search. Lengths are tried in increasing order; within a length,
// slot sequences are tried lexicographically with subsets ordered by bitmask
// value (transmitter 1 = lowest bit) and the first hit is returned.
// Throws BudgetError when n > kBruteForceMaxN.
std::optional<Schedule> BruteForceMinSelective(const Instance& instance, std::size_t max_slots);

}  // namespace affsel
