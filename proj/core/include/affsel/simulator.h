#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "affsel/affectance_matrix.h"
#include "affsel/schedule.h"

namespace affsel {

inline constexpr std::size_t kDefaultMaxRounds = 1'000'000;

// Outcome of one simulated execution.
struct RunRecord {
  std::string protocol;
  std::uint64_t seed = 0;
  std::size_t slots_executed = 0;
  std::vector<TransmitterSet> per_slot_transmitters;
  // 1-based slot of the first successful reception, per receiver.
  std::vector<std::optional<std::size_t>> first_success;
  bool completed = false;

  // Slot by which every receiver had the message (the last first-success);
  // nullopt when some receiver never did.
  std::optional<std::size_t> CompletionRound() const;
};

// Plays the schedule slot by slot. Every slot is evaluated, even after
// completion, so the record covers the whole schedule.
RunRecord RunSchedule(const Instance& instance, const Schedule& schedule,
                      std::string protocol = "schedule", std::uint64_t seed = 0);

enum class AdaptivePolicy { kDecay, kSinr };

struct AdaptiveParams {
  AdaptivePolicy policy = AdaptivePolicy::kDecay;
  std::size_t density = 1;
  std::size_t dilution = 1;
  // Delta for Decay; max_w |F_w| of the instance when unset.
  std::optional<std::size_t> max_in_degree;
};

// Runs a slot-by-slot policy until every receiver has the message or
// `max_rounds` slots have passed. Transmitter v draws from substream
// (seed, v). Throws DomainError when max_rounds == 0.
RunRecord RunAdaptive(const Instance& instance, const AdaptiveParams& params,
                      std::uint64_t seed, std::size_t max_rounds = kDefaultMaxRounds);

// JSON dump mirroring RunRecord's fields (1-based labels and slots).
void WriteRunRecordJson(std::ostream& out, const RunRecord& record);

}  // namespace affsel
