#include "affsel/deterministic.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "affsel/errors.h"
#include "affsel/predicates.h"
#include "affsel/rng.h"

namespace affsel {

std::vector<std::vector<NodeIndex>> PartitionReceivers(const Characterization& ch) {
  const std::size_t extra = ExtraPhases(ch.abar, ch.b);
  std::vector<std::vector<NodeIndex>> buckets(extra + 1);
  for (NodeIndex w = 0; w < ch.abar_w.size(); ++w) {
    const double a = ch.abar_w[w];
    std::size_t r = 0;
    if (a > 0.5) {
      r = 1;
      while (r < extra && a > std::pow(ch.b, static_cast<double>(r)) / 2.0) ++r;
    }
    buckets[r].push_back(w);
  }
  return buckets;
}

std::size_t DeterministicSlotGuard(std::size_t n, std::size_t extra_phases) {
  const std::size_t log2n = n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
  return 10 * (1 + log2n * (extra_phases + 1));
}

namespace {

class ExpectationEngine {
 public:
  ExpectationEngine(const Instance& instance, const DeterministicOptions& options)
      : instance_(instance), options_(options) {}

  // Expected number of `targets` selected under `assignment` with the
  // remaining transmitters on with probability p. Receivers are summed in
  // ascending order.
  double Expected(const std::vector<NodeIndex>& targets, const PartialAssignment& assignment,
                  double p, std::uint64_t step_seed) const {
    double total = 0.0;
    for (NodeIndex w : targets) {
      if (options_.mode == ExpectationMode::kExact) {
        total += ExactSelectionProbability(instance_, w, assignment, p, options_.exact_capacity);
      } else {
        total += MonteCarloSelectionProbability(instance_, w, assignment, p,
                                                options_.mc_samples, step_seed);
      }
    }
    return total;
  }

 private:
  const Instance& instance_;
  const DeterministicOptions& options_;
};

}  // namespace

Schedule DeterministicSchedule(const Instance& instance, const Characterization& ch,
                               const DeterministicOptions& options) {
  const std::size_t n = instance.size();
  if (ch.abar_w.size() != n) throw DomainError("characterization does not match instance");
  if (!(ch.b > 1.0)) throw DomainError("deterministic schedule needs b > 1");

  const std::size_t extra = ExtraPhases(ch.abar, ch.b);
  const std::size_t guard = DeterministicSlotGuard(n, extra);
  std::vector<std::vector<NodeIndex>> pending = PartitionReceivers(ch);
  auto anything_pending = [&] {
    return std::any_of(pending.begin(), pending.end(), [](const auto& b) { return !b.empty(); });
  };

  ExpectationEngine engine(instance, options);
  Schedule schedule(n);
  std::size_t round = 0;
  bool stage_start = true;

  while (anything_pending()) {
    // p <= 1/(2 b abar) happens exactly when r passes the last bucket.
    if (stage_start || round > extra) {
      round = 0;
      stage_start = false;
    }
    // A slot aimed at an empty bucket would be all-silent; skip it.
    if (pending[round].empty()) {
      ++round;
      continue;
    }
    if (schedule.length() >= guard) {
      std::size_t left = 0;
      for (const auto& b : pending) left += b.size();
      throw TerminationError("deterministic schedule exceeded " + std::to_string(guard) +
                             " slots with " + std::to_string(left) + " receivers pending");
    }
    const std::size_t slot_number = schedule.length() + 1;
    const double p = std::pow(ch.b, -static_cast<double>(round));
    const std::vector<NodeIndex>& targets = pending[round];

    PartialAssignment assignment(n);
    for (NodeIndex i = 0; i < n; ++i) {
      const std::uint64_t step_seed = Mix64(Mix64(options.mc_seed, slot_number), i);
      assignment.DecideNext(true);
      const double e_true = engine.Expected(targets, assignment, p, step_seed);
      assignment.ReviseLast(false);
      const double e_false = engine.Expected(targets, assignment, p, step_seed);
      const bool transmit = e_true > e_false;
      assignment.ReviseLast(transmit);
      if (options.on_step) {
        options.on_step(GreedyStep{slot_number, round, i, p, e_true, e_false, transmit});
      }
    }

    TransmitterSet slot(n);
    for (NodeIndex v = 0; v < n; ++v) slot.Assign(v, assignment.Transmits(v));
    for (auto& bucket : pending) {
      std::erase_if(bucket, [&](NodeIndex w) { return IsSelected(instance, slot, w); });
    }
    schedule.Append(std::move(slot));
    ++round;
  }
  return schedule;
}

}  // namespace affsel
