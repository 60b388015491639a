#include "affsel/characterization.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "affsel/errors.h"

namespace affsel {

double MaxAvgAffectance(const Instance& instance, NodeIndex receiver) {
  const LayerTopology& topo = instance.topology();
  if (receiver >= topo.size()) {
    throw DomainError("receiver " + std::to_string(receiver + 1) + " out of range");
  }
  auto senders = topo.Senders(receiver);
  if (senders.empty()) {
    throw DomainError("receiver " + std::to_string(receiver + 1) + " has no senders");
  }
  double best = 0.0;
  const std::size_t first = topo.FirstLinkOf(receiver);
  for (std::size_t k = 0; k < senders.size(); ++k) {
    best = std::max(best, instance.affectance().ColumnTotal(first + k));
  }
  return best;
}

double BaseFromC(double c) { return 1.0 + 1.0 / (2.0 * c); }

double FailureConstant(double b) {
  const double low_branch = 1.0 / (2.0 * b);
  const double high_branch = 0.5 + (1.0 - 1.0 / (2.0 * b)) * std::exp(-(b - 1.0) / b);
  return std::max(low_branch, high_branch);
}

std::size_t Multiplicity(double d, std::size_t n) {
  // m = ceil(2 log_{1/d} n), at least one slot per phase (n = 1 gives 0).
  const double m = std::ceil(2.0 * std::log(static_cast<double>(n)) / std::log(1.0 / d));
  return std::max<std::size_t>(1, static_cast<std::size_t>(m));
}

std::size_t ExtraPhases(double abar, double b) {
  if (!(abar > 0.0)) return 0;
  const double k = std::ceil(std::log(2.0 * abar) / std::log(b));
  return k > 0.0 ? static_cast<std::size_t>(k) : 0;
}

std::size_t FallbackPhases(std::size_t n, double b) {
  if (n < 2) return 1;
  return ExtraPhases(static_cast<double>(n - 1), b) + 1;
}

Characterization Characterize(const Instance& instance, std::optional<double> c) {
  const LayerTopology& topo = instance.topology();
  Characterization ch;
  ch.n = topo.size();
  ch.abar_w.resize(ch.n);
  for (NodeIndex w = 0; w < ch.n; ++w) {
    ch.abar_w[w] = MaxAvgAffectance(instance, w);
    ch.abar = std::max(ch.abar, ch.abar_w[w]);
    ch.c_min = std::max(ch.c_min, ch.abar_w[w] / static_cast<double>(topo.Senders(w).size()));
  }

  if (c) {
    if (!(*c > 1.0)) {
      throw ConstraintError("c must be > 1, got " + std::to_string(*c));
    }
    for (NodeIndex w = 0; w < ch.n; ++w) {
      const double cap = *c * static_cast<double>(topo.Senders(w).size());
      if (ch.abar_w[w] > cap) {
        throw ConstraintError("receiver " + std::to_string(w + 1) + " violates Abar_w <= c|F_w|: " +
                              std::to_string(ch.abar_w[w]) + " > " + std::to_string(cap));
      }
    }
    ch.c = *c;
  } else {
    ch.c = std::max(1.0 + kCMargin, ch.c_min + kCMargin);
  }

  ch.b = BaseFromC(ch.c);
  ch.d = FailureConstant(ch.b);
  ch.m = Multiplicity(ch.d, ch.n);
  ch.phases = ExtraPhases(ch.abar, ch.b) + 1;
  return ch;
}

}  // namespace affsel
