#include "affsel/simulator.h"

#include <algorithm>
#include <ostream>

#include <json.hpp>

#include "affsel/baselines.h"
#include "affsel/errors.h"
#include "affsel/predicates.h"
#include "affsel/rng.h"

namespace affsel {

std::optional<std::size_t> RunRecord::CompletionRound() const {
  std::size_t last = 0;
  for (const auto& f : first_success) {
    if (!f) return std::nullopt;
    last = std::max(last, *f);
  }
  return last;
}

namespace {

class CoverageTracker {
 public:
  explicit CoverageTracker(const Instance& instance)
      : instance_(instance), first_(instance.size()), pending_(instance.size()) {
    for (NodeIndex w = 0; w < instance.size(); ++w) pending_[w] = w;
  }

  void Observe(const TransmitterSet& slot, std::size_t slot_number) {
    std::erase_if(pending_, [&](NodeIndex w) {
      if (!IsSelected(instance_, slot, w)) return false;
      first_[w] = slot_number;
      return true;
    });
  }

  bool done() const { return pending_.empty(); }
  std::vector<std::optional<std::size_t>> TakeFirst() { return std::move(first_); }

 private:
  const Instance& instance_;
  std::vector<std::optional<std::size_t>> first_;
  std::vector<NodeIndex> pending_;
};

}  // namespace

RunRecord RunSchedule(const Instance& instance, const Schedule& schedule, std::string protocol,
                      std::uint64_t seed) {
  if (schedule.transmitters() != instance.size()) {
    throw DomainError("schedule n does not match instance");
  }
  RunRecord record;
  record.protocol = std::move(protocol);
  record.seed = seed;
  CoverageTracker tracker(instance);
  for (std::size_t j = 0; j < schedule.length(); ++j) {
    tracker.Observe(schedule.slot(j), j + 1);
  }
  record.slots_executed = schedule.length();
  record.per_slot_transmitters = schedule.slots();
  record.completed = tracker.done();
  record.first_success = tracker.TakeFirst();
  return record;
}

RunRecord RunAdaptive(const Instance& instance, const AdaptiveParams& params,
                      std::uint64_t seed, std::size_t max_rounds) {
  if (max_rounds == 0) throw DomainError("max_rounds must be >= 1");
  const std::size_t n = instance.size();
  const std::size_t delta = params.max_in_degree.value_or(instance.topology().MaxInDegree());

  std::vector<Rng> streams;
  streams.reserve(n);
  for (NodeIndex v = 0; v < n; ++v) streams.push_back(Rng::Substream(seed, v));
  std::vector<DecayState> decay(n);

  RunRecord record;
  record.protocol = params.policy == AdaptivePolicy::kDecay ? "decay" : "sinr";
  record.seed = seed;
  CoverageTracker tracker(instance);

  std::size_t round = 0;
  while (!tracker.done() && round < max_rounds) {
    ++round;
    TransmitterSet slot(n);
    for (NodeIndex v = 0; v < n; ++v) {
      const bool on = params.policy == AdaptivePolicy::kDecay
                          ? DecayStep(decay[v], delta, streams[v])
                          : SinrStep(v + 1, round, params.density, params.dilution, streams[v]);
      if (on) slot.Insert(v);
    }
    tracker.Observe(slot, round);
    record.per_slot_transmitters.push_back(std::move(slot));
  }
  record.slots_executed = round;
  record.completed = tracker.done();
  record.first_success = tracker.TakeFirst();
  return record;
}

void WriteRunRecordJson(std::ostream& out, const RunRecord& record) {
  nlohmann::ordered_json j;
  j["protocol"] = record.protocol;
  j["seed"] = record.seed;
  j["slots_executed"] = record.slots_executed;
  auto slots = nlohmann::ordered_json::array();
  for (const auto& s : record.per_slot_transmitters) {
    auto members = nlohmann::ordered_json::array();
    for (NodeIndex v : s.Members()) members.push_back(v + 1);
    slots.push_back(std::move(members));
  }
  j["per_slot_transmitters"] = std::move(slots);
  auto first = nlohmann::ordered_json::object();
  for (NodeIndex w = 0; w < record.first_success.size(); ++w) {
    const auto& f = record.first_success[w];
    first[std::to_string(w + 1)] = f ? nlohmann::ordered_json(*f) : nlohmann::ordered_json(nullptr);
  }
  j["first_success"] = std::move(first);
  j["completed"] = record.completed;
  out << j.dump(2) << '\n';
}

}  // namespace affsel
