#pragma once

#include <cstddef>

#include "affsel/rng.h"

namespace affsel {

// Per-transmitter Decay state.
struct DecayState {
  std::size_t counter = 0;
  bool transmit = false;
};

// 2 * ceil(log2 delta), floored at 1 so that delta = 1 still has a period.
std::size_t DecayPeriod(std::size_t max_in_degree);

// One slot of Decay for one transmitter. At counter 0 the node re-arms;
// an armed node transmits and then disarms with probability 1/2. The
// counter wraps at DecayPeriod. Draws from `rng` only when transmitting.
bool DecayStep(DecayState& state, std::size_t max_in_degree, Rng& rng);

// One round of the SINR-style baseline for the transmitter with 1-based
// label `label`: eligible iff round == label (mod dilution), then transmits
// with probability 1/density. Draws from `rng` only when eligible.
bool SinrStep(std::size_t label, std::size_t round, std::size_t density, std::size_t dilution,
              Rng& rng);

}  // namespace affsel
