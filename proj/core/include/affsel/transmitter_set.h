#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "affsel/topology.h"

namespace affsel {

// Subset of the transmitter index space [0, n).
class TransmitterSet {
 public:
  TransmitterSet() = default;
  explicit TransmitterSet(std::size_t universe) : bits_(universe, false) {}

  static TransmitterSet Of(std::size_t universe, std::initializer_list<NodeIndex> members);
  static TransmitterSet Of(std::size_t universe, const std::vector<NodeIndex>& members);
  static TransmitterSet Full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const;
  bool empty() const { return count() == 0; }

  bool Contains(NodeIndex v) const { return v < bits_.size() && bits_[v]; }
  void Insert(NodeIndex v);
  void Erase(NodeIndex v);
  void Assign(NodeIndex v, bool member);

  // Ascending member list.
  std::vector<NodeIndex> Members() const;

  friend bool operator==(const TransmitterSet&, const TransmitterSet&) = default;

 private:
  std::vector<bool> bits_;
};

}  // namespace affsel
