#include "affsel/selection_probability.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "affsel/errors.h"
#include "affsel/predicates.h"
#include "affsel/rng.h"

namespace affsel {

PartialAssignment PartialAssignment::FromPrefix(std::size_t n, const std::vector<bool>& prefix) {
  if (prefix.size() > n) throw DomainError("prefix longer than transmitter count");
  PartialAssignment a(n);
  for (bool t : prefix) a.DecideNext(t);
  return a;
}

void PartialAssignment::DecideNext(bool transmit) {
  if (complete()) throw DomainError("assignment already complete");
  decisions_[frontier_++] = transmit ? Decision::kTransmit : Decision::kSilent;
}

void PartialAssignment::ReviseLast(bool transmit) {
  if (frontier_ == 0) throw DomainError("no decision to revise");
  decisions_[frontier_ - 1] = transmit ? Decision::kTransmit : Decision::kSilent;
}

std::vector<NodeIndex> RelevantUndecided(const Instance& instance, NodeIndex receiver,
                                         const PartialAssignment& assignment) {
  const LayerTopology& topo = instance.topology();
  auto senders = topo.Senders(receiver);
  std::vector<NodeIndex> out;
  auto consider = [&](NodeIndex u) {
    if (assignment.At(u) == Decision::kUndecided) out.push_back(u);
  };
  const std::size_t first = topo.FirstLinkOf(receiver);
  for (std::size_t k = 0; k < senders.size(); ++k) {
    consider(senders[k]);
    for (const auto& e : instance.affectance().Column(first + k)) consider(e.interferer);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void CheckProbability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability outside [0,1]");
}

void CheckAssignment(const Instance& instance, const PartialAssignment& a) {
  if (a.size() != instance.size()) throw DomainError("assignment size does not match instance");
}

}  // namespace

double ExactSelectionProbability(const Instance& instance, NodeIndex receiver,
                                 const PartialAssignment& assignment, double p,
                                 std::size_t capacity) {
  CheckProbability(p);
  CheckAssignment(instance, assignment);
  const std::vector<NodeIndex> relevant = RelevantUndecided(instance, receiver, assignment);
  const std::size_t r = relevant.size();

  // on[u]: does u transmit in the outcome under evaluation.
  std::vector<char> on(instance.size(), 0);
  for (NodeIndex u = 0; u < assignment.frontier(); ++u) on[u] = assignment.Transmits(u) ? 1 : 0;
  auto selected = [&] {
    return detail::SelectedBy(instance, receiver, [&](NodeIndex u) { return on[u] != 0; });
  };

  if (p == 0.0 || p == 1.0) {
    for (NodeIndex u : relevant) on[u] = p == 1.0 ? 1 : 0;
    return selected() ? 1.0 : 0.0;
  }
  if (r > capacity) {
    throw CapacityError("receiver " + std::to_string(receiver + 1) + " has " +
                        std::to_string(r) + " relevant undecided transmitters (capacity " +
                        std::to_string(capacity) + ")");
  }

  // Count selected outcomes by how many of R_w transmit; the measure of an
  // outcome only depends on that count. Gray-code order flips one bit per
  // step.
  std::vector<std::uint64_t> selected_by_weight(r + 1, 0);
  const std::uint64_t outcomes = std::uint64_t{1} << r;
  std::uint64_t gray = 0;
  for (std::uint64_t i = 0; i < outcomes; ++i) {
    if (i > 0) {
      const std::uint64_t next = i ^ (i >> 1);
      const int bit = std::countr_zero(next ^ gray);
      on[relevant[static_cast<std::size_t>(bit)]] ^= 1;
      gray = next;
    }
    if (selected()) ++selected_by_weight[static_cast<std::size_t>(std::popcount(gray))];
  }

  double probability = 0.0;
  for (std::size_t k = 0; k <= r; ++k) {
    if (selected_by_weight[k] == 0) continue;
    const double mass = std::pow(p, static_cast<double>(k)) *
                        std::pow(1.0 - p, static_cast<double>(r - k));
    probability += static_cast<double>(selected_by_weight[k]) * mass;
  }
  return std::min(1.0, probability);
}

double MonteCarloSelectionProbability(const Instance& instance, NodeIndex receiver,
                                      const PartialAssignment& assignment, double p,
                                      std::size_t samples, std::uint64_t seed) {
  CheckProbability(p);
  CheckAssignment(instance, assignment);
  if (samples == 0) throw DomainError("Monte Carlo needs at least one sample");
  const std::vector<NodeIndex> relevant = RelevantUndecided(instance, receiver, assignment);

  std::vector<char> on(instance.size(), 0);
  for (NodeIndex u = 0; u < assignment.frontier(); ++u) on[u] = assignment.Transmits(u) ? 1 : 0;

  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    for (NodeIndex u : relevant) on[u] = CounterUniform(seed, s, u) < p ? 1 : 0;
    if (detail::SelectedBy(instance, receiver, [&](NodeIndex u) { return on[u] != 0; })) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace affsel
