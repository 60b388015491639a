#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "affsel/topology.h"

namespace affsel {

// Sparse affectance matrix a(u, (v, w)), stored column-wise: one column per
// link id, holding the nonzero interferers in ascending transmitter order.
// Absent entries are 0. Self-affectance a(v, (v, w)) is always 0.
class AffectanceMatrix {
 public:
  struct Entry {
    NodeIndex interferer = 0;
    double value = 0.0;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  class Builder {
   public:
    explicit Builder(const LayerTopology& topology);

    // Throws DomainError for unknown links or interferers, values outside
    // [0, 1], or a nonzero self-affectance. Setting 0 erases the entry.
    Builder& Set(NodeIndex interferer, Link link, double value);
    Builder& SetById(NodeIndex interferer, std::size_t link_id, double value);

    AffectanceMatrix Build() &&;

   private:
    const LayerTopology* topology_;
    std::vector<std::vector<Entry>> columns_;
  };

  AffectanceMatrix() = default;

  std::size_t link_count() const { return columns_.size(); }
  std::size_t nonzero_count() const;

  // Nonzero entries on link `link_id`, ascending by interferer.
  std::span<const Entry> Column(std::size_t link_id) const { return columns_[link_id]; }

  // a(u, link); 0 when absent.
  double At(NodeIndex interferer, std::size_t link_id) const;

  // Sum over all interferers u of a(u, link), ascending-u summation.
  double ColumnTotal(std::size_t link_id) const;

  friend bool operator==(const AffectanceMatrix&, const AffectanceMatrix&) = default;

 private:
  explicit AffectanceMatrix(std::vector<std::vector<Entry>> columns)
      : columns_(std::move(columns)) {}

  std::vector<std::vector<Entry>> columns_;
};

// A layer topology together with its affectance matrix. Immutable.
class Instance {
 public:
  Instance(LayerTopology topology, AffectanceMatrix affectance);

  const LayerTopology& topology() const { return topology_; }
  const AffectanceMatrix& affectance() const { return affectance_; }
  std::size_t size() const { return topology_.size(); }

  // a(u, (v, w)); throws DomainError when (v, w) is not a link.
  double Affectance(NodeIndex interferer, Link link) const;
  std::size_t RequireLink(Link link) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  LayerTopology topology_;
  AffectanceMatrix affectance_;
};

}  // namespace affsel
