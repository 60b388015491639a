#include "affsel/office_grid.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "affsel/errors.h"

namespace affsel {

void OfficeGridSpec::Validate() const {
  if (offices < 1) throw DomainError("offices must be >= 1");
  if (nodes_per_office < 1) throw DomainError("nodes_per_office must be >= 1");
  if (!(reach >= 1.0)) throw DomainError("reach must be >= 1");
  if (!(wall_penalty >= 0.0)) throw DomainError("wall_penalty must be >= 0");
  if (!(alpha > 0.0)) throw DomainError("alpha must be > 0");
  if (!(office_width > 0.0)) throw DomainError("office_width must be > 0");
}

double GridDistance(GridPoint a, GridPoint b) { return std::hypot(a.x - b.x, a.y - b.y); }

double OfficeAffectance(double grid_distance, std::size_t walls, const OfficeGridSpec& spec) {
  const double effective = grid_distance + spec.wall_penalty * static_cast<double>(walls);
  if (effective <= 0.0) return 1.0;
  const double a = std::min(1.0, std::pow(spec.reach / effective, spec.alpha));
  return a < kSparsityFloor ? 0.0 : a;
}

OfficeLayer GenerateOfficeLayer(const OfficeGridSpec& spec) {
  spec.Validate();
  const std::size_t n = spec.n();
  const std::size_t npo = spec.nodes_per_office;
  const double margin = std::min(1.0, spec.office_width / 2.0);
  const double span = spec.office_width - 2.0 * margin;

  std::vector<GridPoint> tx(n);
  std::vector<GridPoint> rx(n);
  std::vector<std::size_t> office_of(n);
  std::vector<Link> links;
  for (std::size_t k = 0; k < spec.offices; ++k) {
    for (std::size_t j = 0; j < npo; ++j) {
      const std::size_t idx = k * npo + j;
      const double offset = npo == 1 ? spec.office_width / 2.0
                                     : margin + span * static_cast<double>(j) /
                                                    static_cast<double>(npo - 1);
      const double x = static_cast<double>(k) * spec.office_width + offset;
      tx[idx] = {x, 0.0};
      rx[idx] = {x, 1.0};
      office_of[idx] = k;
    }
    for (std::size_t v = 0; v < npo; ++v) {
      for (std::size_t w = 0; w < npo; ++w) links.push_back({k * npo + v, k * npo + w});
    }
  }

  LayerTopology topology(n, std::move(links));
  AffectanceMatrix::Builder builder(topology);
  for (std::size_t id = 0; id < topology.link_count(); ++id) {
    const Link link = topology.link(id);
    for (NodeIndex u = 0; u < n; ++u) {
      if (u == link.transmitter) continue;
      const std::size_t ou = office_of[u];
      const std::size_t ow = office_of[link.receiver];
      const std::size_t walls = ou > ow ? ou - ow : ow - ou;
      const double d = GridDistance(tx[u], rx[link.receiver]);
      builder.SetById(u, id, OfficeAffectance(d, walls, spec));
    }
  }
  return OfficeLayer{Instance(std::move(topology), std::move(builder).Build()), std::move(tx),
                     std::move(rx), std::move(office_of)};
}

std::size_t DefaultSinrDilution(const OfficeGridSpec& spec) {
  const double classes = std::ceil((2.0 * spec.reach + spec.wall_penalty) / spec.office_width);
  return std::max<std::size_t>(1, static_cast<std::size_t>(classes));
}

std::size_t DefaultSinrDensity(const OfficeGridSpec& spec) { return spec.nodes_per_office; }

OfficeGridSpec ParseOfficeGridSpec(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("scenario spec: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("scenario spec: expected a JSON object");
  OfficeGridSpec spec;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const auto& v = it.value();
    auto count = [&]() -> std::size_t {
      if (!v.is_number_integer() || v.get<long long>() < 1) {
        throw ParseError("scenario spec: '" + key + "' must be a positive integer");
      }
      return v.get<std::size_t>();
    };
    auto real = [&]() -> double {
      if (!v.is_number()) throw ParseError("scenario spec: '" + key + "' must be a number");
      return v.get<double>();
    };
    if (key == "offices") spec.offices = count();
    else if (key == "nodes_per_office") spec.nodes_per_office = count();
    else if (key == "reach") spec.reach = real();
    else if (key == "wall_penalty") spec.wall_penalty = real();
    else if (key == "alpha") spec.alpha = real();
    else if (key == "office_width") spec.office_width = real();
    else throw ParseError("scenario spec: unknown field '" + key + "'");
  }
  try {
    spec.Validate();
  } catch (const DomainError& e) {
    throw ParseError(std::string("scenario spec: ") + e.what());
  }
  return spec;
}

OfficeGridSpec LoadOfficeGridSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario spec '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseOfficeGridSpec(ss.str());
}

std::string FormatOfficeGridSpec(const OfficeGridSpec& spec) {
  nlohmann::ordered_json j;
  j["offices"] = spec.offices;
  j["nodes_per_office"] = spec.nodes_per_office;
  j["reach"] = spec.reach;
  j["wall_penalty"] = spec.wall_penalty;
  j["alpha"] = spec.alpha;
  j["office_width"] = spec.office_width;
  return j.dump(2) + "\n";
}

}  // namespace affsel
