#include "affsel/baselines.h"

#include <algorithm>
#include <bit>

#include "affsel/errors.h"

namespace affsel {

std::size_t DecayPeriod(std::size_t max_in_degree) {
  if (max_in_degree == 0) throw DomainError("Decay needs max in-degree >= 1");
  const std::size_t ceil_log2 =
      max_in_degree <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(max_in_degree - 1));
  return std::max<std::size_t>(1, 2 * ceil_log2);
}

bool DecayStep(DecayState& state, std::size_t max_in_degree, Rng& rng) {
  const std::size_t period = DecayPeriod(max_in_degree);
  if (state.counter == 0) state.transmit = true;
  const bool transmits = state.transmit;
  if (transmits && rng.Bernoulli(0.5)) state.transmit = false;
  ++state.counter;
  if (state.counter == period) state.counter = 0;
  return transmits;
}

bool SinrStep(std::size_t label, std::size_t round, std::size_t density, std::size_t dilution,
              Rng& rng) {
  if (density == 0 || dilution == 0) throw DomainError("density and dilution must be >= 1");
  if (round % dilution != label % dilution) return false;
  return rng.Bernoulli(1.0 / static_cast<double>(density));
}

}  // namespace affsel
