#include "affsel/randomized.h"

#include <cmath>

#include "affsel/errors.h"
#include "affsel/rng.h"

namespace affsel {

std::size_t RandomizedPhases(const RandomizedParams& params, std::size_t n) {
  const Characterization& ch = params.characterization;
  if (params.fallback_mode) return FallbackPhases(n, ch.b);
  return ExtraPhases(ch.abar, ch.b) + 1;
}

std::size_t RandomizedMultiplicity(const RandomizedParams& params) {
  if (params.m_override) {
    if (*params.m_override == 0) throw DomainError("m_override must be >= 1");
    return *params.m_override;
  }
  return params.characterization.m;
}

Schedule RandomizedSchedule(const RandomizedParams& params, std::size_t n) {
  const double b = params.characterization.b;
  if (!(b > 1.0)) throw DomainError("randomized schedule needs b > 1");
  const std::size_t phases = RandomizedPhases(params, n);
  const std::size_t m = RandomizedMultiplicity(params);

  std::vector<TransmitterSet> slots(phases * m, TransmitterSet(n));
  for (NodeIndex v = 0; v < n; ++v) {
    Rng rng = Rng::Substream(params.seed, v);
    for (std::size_t phase = 0; phase < phases; ++phase) {
      const double p = std::pow(b, -static_cast<double>(phase));
      for (std::size_t j = 0; j < m; ++j) {
        if (rng.Bernoulli(p)) slots[phase * m + j].Insert(v);
      }
    }
  }
  return Schedule(n, std::move(slots));
}

}  // namespace affsel
