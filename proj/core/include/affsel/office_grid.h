#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "affsel/affectance_matrix.h"

namespace affsel {

// Affectance values below this are stored as 0.
inline constexpr double kSparsityFloor = 1e-6;

// A row of identical offices, each a Faraday cage whose walls add
// `wall_penalty` grid cells of effective distance per wall crossed.
struct OfficeGridSpec {
  std::size_t offices = 2;
  std::size_t nodes_per_office = 3;
  double reach = 5.0;          // grid cells
  double wall_penalty = 10.0;  // grid cells per wall
  double alpha = 2.0;          // decay exponent
  double office_width = 5.0;   // grid cells

  std::size_t n() const { return offices * nodes_per_office; }
  // Throws DomainError on non-positive counts, reach < 1, etc.
  void Validate() const;
};

struct GridPoint {
  double x = 0.0;
  double y = 0.0;
};

double GridDistance(GridPoint a, GridPoint b);

// min(1, (reach / d_eff)^alpha) with d_eff = distance + wall_penalty * walls,
// truncated to 0 below kSparsityFloor.
double OfficeAffectance(double grid_distance, std::size_t walls, const OfficeGridSpec& spec);

struct OfficeLayer {
  Instance instance;
  // Indexed by node index; transmitter k*npo + j and receiver k*npo + j both
  // sit in office k.
  std::vector<GridPoint> transmitter_positions;
  std::vector<GridPoint> receiver_positions;
  std::vector<std::size_t> office_of;
};

// Transmitters on row y = 0 and receivers on row y = 1, spread evenly inside
// each office one cell from its walls. Every transmitter links to every
// receiver of its own office and to none elsewhere. For u != v,
// a(u, (v, w)) = OfficeAffectance(|u - w|, walls between u and w).
OfficeLayer GenerateOfficeLayer(const OfficeGridSpec& spec);

// SINR baseline defaults for office scenarios.
std::size_t DefaultSinrDilution(const OfficeGridSpec& spec);
std::size_t DefaultSinrDensity(const OfficeGridSpec& spec);

// JSON object with the OfficeGridSpec field names; omitted fields keep their
// defaults, unknown fields are rejected.
OfficeGridSpec ParseOfficeGridSpec(const std::string& text);
OfficeGridSpec LoadOfficeGridSpec(const std::string& path);
std::string FormatOfficeGridSpec(const OfficeGridSpec& spec);

}  // namespace affsel
