#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "affsel/transmitter_set.h"

namespace affsel {

// Ordered family S_1..S_s of transmitter subsets, one per slot.
class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(std::size_t n) : n_(n) {}
  Schedule(std::size_t n, std::vector<TransmitterSet> slots);

  std::size_t transmitters() const { return n_; }
  std::size_t length() const { return slots_.size(); }
  bool empty() const { return slots_.empty(); }

  const std::vector<TransmitterSet>& slots() const { return slots_; }
  const TransmitterSet& slot(std::size_t j) const { return slots_[j]; }

  void Append(TransmitterSet slot);

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<TransmitterSet> slots_;
};

// Text form: header "slots=<s> n=<n>", then one line per slot listing the
// 1-based transmitter labels in ascending order, space separated. An empty
// slot is an empty line.
void WriteSchedule(std::ostream& out, const Schedule& schedule);
std::string FormatSchedule(const Schedule& schedule);
Schedule ReadSchedule(std::istream& in);
Schedule ParseSchedule(const std::string& text);

}  // namespace affsel
