#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace affsel {

// Transmitters and receivers are both indexed 0..n-1 internally. Files and
// CLI output use 1-based labels.
using NodeIndex = std::size_t;

struct Link {
  NodeIndex transmitter = 0;
  NodeIndex receiver = 0;

  friend auto operator<=>(const Link&, const Link&) = default;
};

// Bipartite transmitter -> receiver graph of one dissemination layer.
//
// Links are stored grouped by receiver (CSR), so the sender set F_w of every
// receiver is a contiguous ascending slice and each link has a dense id.
// Every receiver must have at least one incoming link.
class LayerTopology {
 public:
  // Throws DomainError on out-of-range indices, duplicate links, or a
  // receiver without senders.
  LayerTopology(std::size_t n, std::vector<Link> links);

  std::size_t size() const { return n_; }
  std::size_t link_count() const { return links_.size(); }

  // All links ordered by (receiver, transmitter). Position == link id.
  std::span<const Link> links() const { return links_; }
  const Link& link(std::size_t id) const { return links_[id]; }

  // F_w, ascending.
  std::span<const NodeIndex> Senders(NodeIndex w) const;
  // Link ids of E_w, parallel to Senders(w).
  std::size_t FirstLinkOf(NodeIndex w) const { return offsets_[w]; }

  std::optional<std::size_t> LinkId(Link link) const;
  bool HasLink(Link link) const { return LinkId(link).has_value(); }

  // Delta: max_w |F_w|.
  std::size_t MaxInDegree() const;

  friend bool operator==(const LayerTopology& a, const LayerTopology& b) {
    return a.n_ == b.n_ && a.links_ == b.links_;
  }

 private:
  std::size_t n_;
  std::vector<Link> links_;
  std::vector<NodeIndex> senders_;     // transmitter of links_[i]
  std::vector<std::size_t> offsets_;  // n_ + 1 entries
};

}  // namespace affsel
