#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "affsel/characterization.h"
#include "affsel/schedule.h"
#include "affsel/selection_probability.h"

namespace affsel {

enum class ExpectationMode { kExact, kMonteCarlo };

// One greedy decision of the conditional-expectation protocol.
struct GreedyStep {
  std::size_t slot = 0;         // 1-based
  std::size_t round = 0;        // r, with p = b^-r
  NodeIndex transmitter = 0;
  double p = 1.0;
  double e_true = 0.0;          // expected # selected in W'_r if it transmits
  double e_false = 0.0;         // ... if it stays silent
  bool transmit = false;
};

struct DeterministicOptions {
  ExpectationMode mode = ExpectationMode::kExact;
  std::size_t exact_capacity = kExactCapacity;
  std::size_t mc_samples = 4096;
  std::uint64_t mc_seed = 0;
  // Called after every greedy decision; used by tests to audit the
  // expectation chain.
  std::function<void(const GreedyStep&)> on_step;
};

// W'_0 = {w : abar_w <= 1/2}, W'_r = {w : b^(r-1)/2 < abar_w <= b^r/2} for
// r = 1..ExtraPhases(abar, b). Entry r lists its receivers ascending.
std::vector<std::vector<NodeIndex>> PartitionReceivers(const Characterization& ch);

// Slots allowed before the protocol is declared stuck:
// 10 * (1 + ceil(log2 n) * (extra_phases + 1)).
std::size_t DeterministicSlotGuard(std::size_t n, std::size_t extra_phases);

// Derandomized schedule by conditional expectations. Each slot targets the
// pending receivers of round r with p = b^-r; transmitters 1..n are fixed in
// order, each taking the branch with the larger expected number of selected
// targets (ties go to silent). After the slot, every receiver it selects is
// dropped from the pending sets. r advances each slot and wraps to 0 once
// p <= 1/(2 b abar). Stops when nothing is pending.
//
// Throws CapacityError (exact mode) naming the receiver, or
// TerminationError once DeterministicSlotGuard is exceeded.
Schedule DeterministicSchedule(const Instance& instance, const Characterization& ch,
                               const DeterministicOptions& options = {});

}  // namespace affsel
