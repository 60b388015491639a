#include "affsel/oracle.h"

#include <cstdint>
#include <string>
#include <vector>

#include "affsel/errors.h"
#include "affsel/predicates.h"

namespace affsel {

namespace {

struct Candidate {
  std::uint32_t subset;
  std::uint32_t covers;
};

class Search {
 public:
  Search(std::vector<Candidate> candidates, std::uint32_t goal)
      : candidates_(std::move(candidates)), goal_(goal) {}

  bool Run(std::size_t length) {
    chosen_.clear();
    return Extend(0, 0, length);
  }

  const std::vector<std::uint32_t>& chosen() const { return chosen_; }

 private:
  bool Extend(std::size_t start, std::uint32_t covered, std::size_t remaining) {
    if (covered == goal_) return true;
    if (remaining == 0) return false;
    for (std::size_t i = start; i < candidates_.size(); ++i) {
      chosen_.push_back(candidates_[i].subset);
      if (Extend(i + 1, covered | candidates_[i].covers, remaining - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<Candidate> candidates_;
  std::uint32_t goal_;
  std::vector<std::uint32_t> chosen_;
};

}  // namespace

std::optional<Schedule> BruteForceMinSelective(const Instance& instance, std::size_t max_slots) {
  const std::size_t n = instance.size();
  if (n > kBruteForceMaxN) {
    throw BudgetError("brute force search refused: n=" + std::to_string(n) + " exceeds " +
                      std::to_string(kBruteForceMaxN));
  }
  const std::uint32_t goal = (1u << n) - 1;

  // Subsets with identical coverage are interchangeable; keeping the first
  // (smallest bitmask) preserves the lexicographic first hit.
  std::vector<Candidate> candidates;
  std::vector<bool> seen_cover(std::size_t{1} << n, false);
  for (std::uint32_t subset = 1; subset <= goal; ++subset) {
    std::uint32_t covers = 0;
    for (NodeIndex w = 0; w < n; ++w) {
      const bool selected = detail::SelectedBy(
          instance, w, [subset](NodeIndex u) { return ((subset >> u) & 1u) != 0; });
      if (selected) covers |= 1u << w;
    }
    if (covers == 0 || seen_cover[covers]) continue;
    seen_cover[covers] = true;
    candidates.push_back({subset, covers});
  }

  Search search(std::move(candidates), goal);
  for (std::size_t length = 0; length <= max_slots; ++length) {
    if (!search.Run(length)) continue;
    Schedule schedule(n);
    for (std::uint32_t subset : search.chosen()) {
      TransmitterSet slot(n);
      for (NodeIndex v = 0; v < n; ++v) {
        if ((subset >> v) & 1u) slot.Insert(v);
      }
      schedule.Append(std::move(slot));
    }
    return schedule;
  }
  return std::nullopt;
}

}  // namespace affsel
