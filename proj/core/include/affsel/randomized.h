#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "affsel/characterization.h"
#include "affsel/schedule.h"

namespace affsel {

struct RandomizedParams {
  Characterization characterization;
  std::uint64_t seed = 0;
  // Run ceil(log_b(2(n-1))) + 1 phases instead of depending on abar.
  bool fallback_mode = false;
  std::optional<std::size_t> m_override;
};

// Phase count the randomized protocol will use for `n` transmitters.
std::size_t RandomizedPhases(const RandomizedParams& params, std::size_t n);
std::size_t RandomizedMultiplicity(const RandomizedParams& params);

// Decay-style schedule with affectance-aware probabilities. Phase i
// (0-based) contributes m slots, and every transmitter joins each of them
// independently with probability b^-i. Each transmitter draws from its own
// substream (seed, transmitter index), phase-major then slot-minor, so the
// result depends only on (params, n).
Schedule RandomizedSchedule(const RandomizedParams& params, std::size_t n);

}  // namespace affsel
