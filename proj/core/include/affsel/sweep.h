#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "affsel/affectance_matrix.h"
#include "affsel/deterministic.h"
#include "affsel/simulator.h"

namespace affsel {

enum class ProtocolKind { kRandomized, kDeterministic, kDecay, kSinr };

std::string ProtocolName(ProtocolKind kind);
std::optional<ProtocolKind> ParseProtocolKind(const std::string& name);

struct ProtocolSpec {
  ProtocolKind kind = ProtocolKind::kRandomized;
  std::optional<double> c;
  std::optional<std::size_t> m_override;
  bool fallback_mode = false;
  std::optional<std::size_t> density;
  std::optional<std::size_t> dilution;
  ExpectationMode mode = ExpectationMode::kExact;
  std::size_t mc_samples = 4096;

  std::string name() const { return ProtocolName(kind); }
  // The deterministic protocol ignores the seed.
  bool seeded() const { return kind != ProtocolKind::kDeterministic; }
};

struct SweepInstance {
  std::string id;
  Instance instance;
  // Scenario defaults for the SINR baseline; fall back to density = Delta,
  // dilution = 1 when unset.
  std::optional<std::size_t> sinr_density;
  std::optional<std::size_t> sinr_dilution;
};

struct SweepRow {
  std::string instance_id;
  std::string protocol;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t rounds = 0;
  bool completed = false;
  // Non-empty when the run aborted (capacity or termination guard).
  std::string error;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepOptions {
  std::size_t max_rounds = kDefaultMaxRounds;
  // 0 = hardware concurrency.
  std::size_t workers = 0;
  // Emit a single row (first seed) for protocols that ignore the seed.
  bool collapse_unseeded = false;
  bool keep_records = false;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<RunRecord> records;  // parallel to rows when keep_records
};

// One run. Schedule protocols are built and then played in full; adaptive
// baselines stop at completion or max_rounds.
RunRecord RunProtocol(const SweepInstance& instance, const ProtocolSpec& protocol,
                      std::uint64_t seed, std::size_t max_rounds);

// Turns a record into a table row: rounds is the completion round (the last
// first-success slot), or max_rounds when the run did not complete within
// max_rounds.
SweepRow MakeRow(const SweepInstance& instance, const ProtocolSpec& protocol,
                 const RunRecord& record, std::size_t max_rounds);

// Cross product instance x protocol x seed, run on a worker pool. Rows come
// back in (instance, protocol, seed) order whatever the completion order.
// Capacity and termination failures are recorded in the row, not thrown.
SweepResult Sweep(const std::vector<SweepInstance>& instances,
                  const std::vector<ProtocolSpec>& protocols,
                  const std::vector<std::uint64_t>& seeds, const SweepOptions& options = {});

// Header: instance_id,protocol,seed,n,rounds,completed
void WriteSweepCsv(std::ostream& out, const std::vector<SweepRow>& rows);

struct SweepSummary {
  std::string instance_id;
  std::string protocol;
  std::size_t n = 0;
  std::size_t runs = 0;
  std::size_t completed_runs = 0;
  double mean_rounds = 0.0;
  double median_rounds = 0.0;
  std::size_t max_rounds = 0;
};

// Per (instance, protocol) statistics, in first-appearance order.
std::vector<SweepSummary> Summarize(const std::vector<SweepRow>& rows);

double Median(std::vector<double> values);

}  // namespace affsel
