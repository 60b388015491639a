#include "affsel/predicates.h"

#include "affsel/errors.h"

namespace affsel {

namespace {

void RequireUniverse(const Instance& instance, const TransmitterSet& t) {
  if (t.universe() != instance.size()) {
    throw DomainError("transmitter set universe does not match instance size");
  }
}

}  // namespace

double TotalAffectance(const Instance& instance, const TransmitterSet& transmitting,
                       Link link) {
  const std::size_t id = instance.RequireLink(link);
  RequireUniverse(instance, transmitting);
  double sum = 0.0;
  for (const auto& e : instance.affectance().Column(id)) {
    if (transmitting.Contains(e.interferer)) sum += e.value;
  }
  return sum;
}

bool IsSuccessful(const Instance& instance, const TransmitterSet& transmitting, Link link) {
  const double total = TotalAffectance(instance, transmitting, link);
  return transmitting.Contains(link.transmitter) && total < 1.0;
}

bool IsSelected(const Instance& instance, const TransmitterSet& transmitting,
                NodeIndex receiver) {
  RequireUniverse(instance, transmitting);
  return detail::SelectedBy(instance, receiver,
                            [&](NodeIndex u) { return transmitting.Contains(u); });
}

SelectivityReport VerifySelective(const Instance& instance, const Schedule& schedule) {
  const std::size_t n = instance.size();
  SelectivityReport report;
  report.first_slot.assign(n, std::nullopt);
  for (std::size_t j = 0; j < schedule.length(); ++j) {
    const TransmitterSet& slot = schedule.slot(j);
    for (NodeIndex w = 0; w < n; ++w) {
      if (report.first_slot[w]) continue;
      if (IsSelected(instance, slot, w)) report.first_slot[w] = j + 1;
    }
  }
  for (NodeIndex w = 0; w < n; ++w) {
    (report.first_slot[w] ? report.covered : report.uncovered).push_back(w);
  }
  return report;
}

}  // namespace affsel
