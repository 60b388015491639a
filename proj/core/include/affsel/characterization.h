#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "affsel/affectance_matrix.h"

namespace affsel {

// Margin added above the tight ratio max_w Abar_w/|F_w| when no c is given;
// also the floor above 1, since the guarantees need c > 1 strictly.
inline constexpr double kCMargin = 1e-6;

// Constants derived from one instance.
struct Characterization {
  std::size_t n = 0;
  std::vector<double> abar_w;  // maximum average affectance per receiver
  double abar = 0.0;           // max_w abar_w
  double c_min = 0.0;          // tight: max_w abar_w / |F_w|
  double c = 0.0;              // constant in use, > 1
  double b = 0.0;              // 1 + 1/(2c)
  double d = 0.0;              // per-receiver failure bound, in (0, 1)
  std::size_t m = 0;           // slots per phase
  std::size_t phases = 0;      // max{ceil(log_b(2 abar)), 0} + 1

  // Slot count of the randomized schedule: phases * m.
  std::size_t SlotBound() const { return phases * m; }
};

// Abar_w. Uses the singleton collapse: the best subset average is reached at
// a single link, so this is max over v in F_w of sum_u a(u, (v, w)).
double MaxAvgAffectance(const Instance& instance, NodeIndex receiver);

// Characterize with a caller-chosen c (must satisfy c > 1 and
// Abar_w <= c |F_w| for every w, else ConstraintError), or with the tightened
// c_min when c is omitted.
Characterization Characterize(const Instance& instance, std::optional<double> c = std::nullopt);

// Closed forms, exposed for direct testing.
double BaseFromC(double c);
double FailureConstant(double b);
std::size_t Multiplicity(double d, std::size_t n);
// max{ceil(log_b(2 abar)), 0}; 0 when abar <= 0.
std::size_t ExtraPhases(double abar, double b);
// Phase count when abar is unknown and bounded by n - 1.
std::size_t FallbackPhases(std::size_t n, double b);

}  // namespace affsel
