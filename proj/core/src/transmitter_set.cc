#include "affsel/transmitter_set.h"

#include <algorithm>
#include <string>

#include "affsel/errors.h"

namespace affsel {

TransmitterSet TransmitterSet::Of(std::size_t universe,
                                  std::initializer_list<NodeIndex> members) {
  TransmitterSet s(universe);
  for (NodeIndex v : members) s.Insert(v);
  return s;
}

TransmitterSet TransmitterSet::Of(std::size_t universe,
                                  const std::vector<NodeIndex>& members) {
  TransmitterSet s(universe);
  for (NodeIndex v : members) s.Insert(v);
  return s;
}

TransmitterSet TransmitterSet::Full(std::size_t universe) {
  TransmitterSet s(universe);
  std::fill(s.bits_.begin(), s.bits_.end(), true);
  return s;
}

std::size_t TransmitterSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

void TransmitterSet::Insert(NodeIndex v) { Assign(v, true); }
void TransmitterSet::Erase(NodeIndex v) { Assign(v, false); }

void TransmitterSet::Assign(NodeIndex v, bool member) {
  if (v >= bits_.size()) {
    throw DomainError("transmitter " + std::to_string(v + 1) + " outside universe of " +
                      std::to_string(bits_.size()));
  }
  bits_[v] = member;
}

std::vector<NodeIndex> TransmitterSet::Members() const {
  std::vector<NodeIndex> out;
  for (std::size_t v = 0; v < bits_.size(); ++v) {
    if (bits_[v]) out.push_back(v);
  }
  return out;
}

}  // namespace affsel
