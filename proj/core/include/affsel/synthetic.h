#pragma once

#include <cstddef>
#include <cstdint>

#include "affsel/affectance_matrix.h"

namespace affsel {

// Random bipartite graph where every receiver draws a degree uniformly from
// 1..max_degree and that many distinct senders uniformly; then RN-encoded.
// Requires 1 <= max_degree <= n.
Instance GenerateRnInstance(std::size_t n, std::size_t max_degree, std::uint64_t seed);

struct RandomInstanceSpec {
  std::size_t n = 6;
  std::size_t max_degree = 3;
  // Chance that a given (u, link) pair with u != v gets a nonzero value.
  double density = 0.5;
  // Values are drawn uniformly from (0, max_value].
  double max_value = 1.0;
  // When nonzero, values are rounded up to multiples of 2^-quantum_bits, so
  // sums of a few of them are exact in double precision.
  int quantum_bits = 0;
};

Instance GenerateRandomInstance(const RandomInstanceSpec& spec, std::uint64_t seed);

}  // namespace affsel
