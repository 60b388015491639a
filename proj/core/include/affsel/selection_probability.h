#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "affsel/affectance_matrix.h"

namespace affsel {

// Largest relevant-undecided set the exact engine will enumerate (2^20
// outcomes per receiver and branch).
inline constexpr std::size_t kExactCapacity = 20;

enum class Decision : std::uint8_t { kUndecided, kSilent, kTransmit };

// Transmit/silent decisions for transmitters 0..frontier-1; the rest are
// undecided and behave randomly when probabilities are evaluated.
class PartialAssignment {
 public:
  explicit PartialAssignment(std::size_t n) : decisions_(n, Decision::kUndecided) {}
  static PartialAssignment FromPrefix(std::size_t n, const std::vector<bool>& prefix);

  std::size_t size() const { return decisions_.size(); }
  std::size_t frontier() const { return frontier_; }
  bool complete() const { return frontier_ == decisions_.size(); }

  Decision At(NodeIndex v) const { return decisions_[v]; }
  bool Transmits(NodeIndex v) const { return decisions_[v] == Decision::kTransmit; }

  // Decide the transmitter at the frontier and advance it.
  void DecideNext(bool transmit);
  // Flip the most recent decision (frontier stays put).
  void ReviseLast(bool transmit);

 private:
  std::vector<Decision> decisions_;
  std::size_t frontier_ = 0;
};

// R_w: undecided transmitters that are senders of w or have nonzero
// affectance on some link into w. Ascending.
std::vector<NodeIndex> RelevantUndecided(const Instance& instance, NodeIndex receiver,
                                         const PartialAssignment& assignment);

// Probability that `receiver` is selected when every undecided transmitter
// transmits independently with probability p. Exact, by enumerating the
// 2^|R_w| outcomes of R_w (other undecided transmitters change no term).
// For p in {0, 1} only one outcome has mass and no enumeration happens.
// Throws CapacityError when |R_w| > capacity and 0 < p < 1.
double ExactSelectionProbability(const Instance& instance, NodeIndex receiver,
                                 const PartialAssignment& assignment, double p,
                                 std::size_t capacity = kExactCapacity);

// Monte Carlo estimate of the same probability. Sample s turns undecided
// transmitter t on iff CounterUniform(seed, s, t) < p, so two calls that
// share a seed see the same outcomes (paired estimates).
double MonteCarloSelectionProbability(const Instance& instance, NodeIndex receiver,
                                      const PartialAssignment& assignment, double p,
                                      std::size_t samples, std::uint64_t seed);

}  // namespace affsel
