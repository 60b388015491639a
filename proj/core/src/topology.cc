#include "affsel/topology.h"

#include <algorithm>
#include <string>
#include <tuple>

#include "affsel/errors.h"

namespace affsel {

LayerTopology::LayerTopology(std::size_t n, std::vector<Link> links)
    : n_(n), links_(std::move(links)) {
  if (n_ == 0) throw DomainError("topology needs n >= 1");
  for (const Link& l : links_) {
    if (l.transmitter >= n_ || l.receiver >= n_) {
      throw DomainError("link (" + std::to_string(l.transmitter + 1) + "," +
                        std::to_string(l.receiver + 1) +
                        ") out of range for n=" + std::to_string(n_));
    }
  }
  std::sort(links_.begin(), links_.end(), [](const Link& a, const Link& b) {
    return std::tie(a.receiver, a.transmitter) <
           std::tie(b.receiver, b.transmitter);
  });
  auto dup = std::adjacent_find(links_.begin(), links_.end());
  if (dup != links_.end()) {
    throw DomainError("duplicate link (" + std::to_string(dup->transmitter + 1) +
                      "," + std::to_string(dup->receiver + 1) + ")");
  }

  senders_.reserve(links_.size());
  offsets_.assign(n_ + 1, 0);
  for (const Link& l : links_) {
    senders_.push_back(l.transmitter);
    ++offsets_[l.receiver + 1];
  }
  for (std::size_t w = 0; w < n_; ++w) {
    if (offsets_[w + 1] == 0) {
      throw DomainError("receiver " + std::to_string(w + 1) +
                        " has no incoming link");
    }
    offsets_[w + 1] += offsets_[w];
  }
}

std::span<const NodeIndex> LayerTopology::Senders(NodeIndex w) const {
  if (w >= n_) throw DomainError("receiver " + std::to_string(w + 1) + " out of range");
  return std::span<const NodeIndex>(senders_).subspan(
      offsets_[w], offsets_[w + 1] - offsets_[w]);
}

std::optional<std::size_t> LayerTopology::LinkId(Link link) const {
  if (link.receiver >= n_ || link.transmitter >= n_) return std::nullopt;
  auto first = senders_.begin() + static_cast<std::ptrdiff_t>(offsets_[link.receiver]);
  auto last = senders_.begin() + static_cast<std::ptrdiff_t>(offsets_[link.receiver + 1]);
  auto it = std::lower_bound(first, last, link.transmitter);
  if (it == last || *it != link.transmitter) return std::nullopt;
  return static_cast<std::size_t>(it - senders_.begin());
}

std::size_t LayerTopology::MaxInDegree() const {
  std::size_t best = 0;
  for (std::size_t w = 0; w < n_; ++w) best = std::max(best, offsets_[w + 1] - offsets_[w]);
  return best;
}

}  // namespace affsel
