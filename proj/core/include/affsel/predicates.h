#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "affsel/affectance_matrix.h"
#include "affsel/schedule.h"
#include "affsel/transmitter_set.h"

namespace affsel {

// a_T((v, w)): sum of a(u, (v, w)) over u in T, summed left to right in
// ascending u. Throws DomainError if (v, w) is not a link.
double TotalAffectance(const Instance& instance, const TransmitterSet& transmitting, Link link);

// v in T and a_T((v, w)) < 1, compared with no tolerance.
bool IsSuccessful(const Instance& instance, const TransmitterSet& transmitting, Link link);

// Some v in F_w intersect T has a successful transmission to w.
bool IsSelected(const Instance& instance, const TransmitterSet& transmitting, NodeIndex receiver);

struct SelectivityReport {
  std::vector<NodeIndex> covered;    // ascending
  std::vector<NodeIndex> uncovered;  // ascending
  // 1-based slot of first selection, per receiver.
  std::vector<std::optional<std::size_t>> first_slot;

  bool selective() const { return uncovered.empty(); }
};

SelectivityReport VerifySelective(const Instance& instance, const Schedule& schedule);

namespace detail {

// Shared kernel for every selection check. `transmits(u)` answers whether
// transmitter u is on in the outcome being evaluated. Summation order is
// the column order (ascending u), so all callers agree bit for bit.
template <class Transmits>
bool SelectedBy(const Instance& instance, NodeIndex receiver, Transmits&& transmits) {
  const LayerTopology& topo = instance.topology();
  const AffectanceMatrix& matrix = instance.affectance();
  auto senders = topo.Senders(receiver);
  std::size_t id = topo.FirstLinkOf(receiver);
  for (std::size_t k = 0; k < senders.size(); ++k, ++id) {
    if (!transmits(senders[k])) continue;
    double sum = 0.0;
    for (const auto& e : matrix.Column(id)) {
      if (transmits(e.interferer)) sum += e.value;
    }
    if (sum < 1.0) return true;
  }
  return false;
}

}  // namespace detail

}  // namespace affsel
