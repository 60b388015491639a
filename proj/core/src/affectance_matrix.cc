#include "affsel/affectance_matrix.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "affsel/errors.h"

namespace affsel {

namespace {

std::string LinkLabel(Link l) {
  return "(" + std::to_string(l.transmitter + 1) + "," + std::to_string(l.receiver + 1) + ")";
}

}  // namespace

AffectanceMatrix::Builder::Builder(const LayerTopology& topology)
    : topology_(&topology), columns_(topology.link_count()) {}

AffectanceMatrix::Builder& AffectanceMatrix::Builder::Set(NodeIndex interferer,
                                                          Link link, double value) {
  auto id = topology_->LinkId(link);
  if (!id) throw DomainError("unknown link " + LinkLabel(link));
  return SetById(interferer, *id, value);
}

AffectanceMatrix::Builder& AffectanceMatrix::Builder::SetById(NodeIndex interferer,
                                                              std::size_t link_id,
                                                              double value) {
  if (link_id >= columns_.size()) throw DomainError("link id out of range");
  const Link link = topology_->link(link_id);
  if (interferer >= topology_->size()) {
    throw DomainError("interferer " + std::to_string(interferer + 1) + " out of range");
  }
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError("affectance " + std::to_string(value) + " on " + LinkLabel(link) +
                      " outside [0,1]");
  }
  if (interferer == link.transmitter && value != 0.0) {
    throw DomainError("self-affectance on " + LinkLabel(link) + " must be 0");
  }
  auto& col = columns_[link_id];
  auto it = std::lower_bound(col.begin(), col.end(), interferer,
                             [](const Entry& e, NodeIndex u) { return e.interferer < u; });
  const bool present = it != col.end() && it->interferer == interferer;
  if (value == 0.0) {
    if (present) col.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    col.insert(it, Entry{interferer, value});
  }
  return *this;
}

AffectanceMatrix AffectanceMatrix::Builder::Build() && {
  return AffectanceMatrix(std::move(columns_));
}

std::size_t AffectanceMatrix::nonzero_count() const {
  std::size_t total = 0;
  for (const auto& c : columns_) total += c.size();
  return total;
}

double AffectanceMatrix::At(NodeIndex interferer, std::size_t link_id) const {
  const auto& col = columns_.at(link_id);
  auto it = std::lower_bound(col.begin(), col.end(), interferer,
                             [](const Entry& e, NodeIndex u) { return e.interferer < u; });
  return (it != col.end() && it->interferer == interferer) ? it->value : 0.0;
}

double AffectanceMatrix::ColumnTotal(std::size_t link_id) const {
  double sum = 0.0;
  for (const Entry& e : columns_.at(link_id)) sum += e.value;
  return sum;
}

Instance::Instance(LayerTopology topology, AffectanceMatrix affectance)
    : topology_(std::move(topology)), affectance_(std::move(affectance)) {
  if (affectance_.link_count() != topology_.link_count()) {
    throw DomainError("affectance matrix does not match topology");
  }
}

std::size_t Instance::RequireLink(Link link) const {
  auto id = topology_.LinkId(link);
  if (!id) throw DomainError("unknown link " + LinkLabel(link));
  return *id;
}

double Instance::Affectance(NodeIndex interferer, Link link) const {
  return affectance_.At(interferer, RequireLink(link));
}

}  // namespace affsel
