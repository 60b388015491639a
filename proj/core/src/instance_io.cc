#include "affsel/instance_io.h"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "affsel/errors.h"

namespace affsel {

namespace {

using nlohmann::json;

std::size_t Label(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer label");
  const long long label = v.get<long long>();
  if (label < 1 || static_cast<std::size_t>(label) > n) {
    throw ParseError(where + ": label " + std::to_string(label) + " outside 1.." +
                     std::to_string(n));
  }
  return static_cast<std::size_t>(label - 1);
}

}  // namespace

Instance ParseInstance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance: expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "n" && it.key() != "links" && it.key() != "affectance") {
      throw ParseError("instance: unknown field '" + it.key() + "'");
    }
  }
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1) {
    throw ParseError("instance: 'n' must be a positive integer");
  }
  const auto n = j["n"].get<std::size_t>();
  if (!j.contains("links") || !j["links"].is_array()) {
    throw ParseError("instance: 'links' must be an array");
  }

  std::vector<Link> links;
  const json& jl = j["links"];
  for (std::size_t k = 0; k < jl.size(); ++k) {
    const std::string where = "instance links[" + std::to_string(k) + "]";
    if (!jl[k].is_array() || jl[k].size() != 2) throw ParseError(where + ": expected [v, w]");
    links.push_back({Label(jl[k][0], n, where), Label(jl[k][1], n, where)});
  }

  std::optional<LayerTopology> topology;
  try {
    topology.emplace(n, std::move(links));
  } catch (const DomainError& e) {
    throw ParseError(std::string("instance topology: ") + e.what());
  }

  AffectanceMatrix::Builder builder(*topology);
  if (j.contains("affectance")) {
    const json& ja = j["affectance"];
    if (!ja.is_array()) throw ParseError("instance: 'affectance' must be an array");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t k = 0; k < ja.size(); ++k) {
      const std::string where = "instance affectance[" + std::to_string(k) + "]";
      const json& e = ja[k];
      if (!e.is_array() || e.size() != 4 || !e[3].is_number()) {
        throw ParseError(where + ": expected [u, v, w, value]");
      }
      const std::size_t u = Label(e[0], n, where);
      const Link link{Label(e[1], n, where), Label(e[2], n, where)};
      const double value = e[3].get<double>();
      if (!seen.insert({u, link.transmitter, link.receiver}).second) {
        throw ParseError(where + ": duplicate entry");
      }
      try {
        builder.Set(u, link, value);
      } catch (const DomainError& err) {
        throw ParseError(where + ": " + err.what());
      }
    }
  }
  return Instance(std::move(*topology), std::move(builder).Build());
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return ParseInstance(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string FormatInstance(const Instance& instance) {
  const LayerTopology& topo = instance.topology();
  std::ostringstream os;
  os << "{\n  \"n\": " << topo.size() << ",\n  \"links\": [";
  for (std::size_t id = 0; id < topo.link_count(); ++id) {
    const Link l = topo.link(id);
    os << (id ? ", " : "") << '[' << l.transmitter + 1 << ", " << l.receiver + 1 << ']';
  }
  os << "],\n  \"affectance\": [";
  bool first = true;
  for (std::size_t id = 0; id < topo.link_count(); ++id) {
    const Link l = topo.link(id);
    for (const auto& e : instance.affectance().Column(id)) {
      os << (first ? "\n    " : ",\n    ") << '[' << e.interferer + 1 << ", "
         << l.transmitter + 1 << ", " << l.receiver + 1 << ", " << json(e.value).dump() << ']';
      first = false;
    }
  }
  os << (first ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

void SaveInstance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write instance '" + path + "'");
  out << FormatInstance(instance);
  if (!out) throw ParseError("write failed for '" + path + "'");
}

}  // namespace affsel
