#include "affsel/sweep.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

#include "affsel/characterization.h"
#include "affsel/errors.h"
#include "affsel/randomized.h"

namespace affsel {

std::string ProtocolName(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::kRandomized: return "randomized";
    case ProtocolKind::kDeterministic: return "deterministic";
    case ProtocolKind::kDecay: return "decay";
    case ProtocolKind::kSinr: return "sinr";
  }
  return "unknown";
}

std::optional<ProtocolKind> ParseProtocolKind(const std::string& name) {
  for (ProtocolKind k : {ProtocolKind::kRandomized, ProtocolKind::kDeterministic,
                         ProtocolKind::kDecay, ProtocolKind::kSinr}) {
    if (ProtocolName(k) == name) return k;
  }
  return std::nullopt;
}

RunRecord RunProtocol(const SweepInstance& instance, const ProtocolSpec& protocol,
                      std::uint64_t seed, std::size_t max_rounds) {
  const Instance& inst = instance.instance;
  switch (protocol.kind) {
    case ProtocolKind::kRandomized: {
      RandomizedParams params{Characterize(inst, protocol.c), seed, protocol.fallback_mode,
                              protocol.m_override};
      return RunSchedule(inst, RandomizedSchedule(params, inst.size()), protocol.name(), seed);
    }
    case ProtocolKind::kDeterministic: {
      DeterministicOptions options;
      options.mode = protocol.mode;
      options.mc_samples = protocol.mc_samples;
      Schedule schedule = DeterministicSchedule(inst, Characterize(inst, protocol.c), options);
      return RunSchedule(inst, schedule, protocol.name(), seed);
    }
    case ProtocolKind::kDecay: {
      AdaptiveParams params;
      params.policy = AdaptivePolicy::kDecay;
      return RunAdaptive(inst, params, seed, max_rounds);
    }
    case ProtocolKind::kSinr: {
      AdaptiveParams params;
      params.policy = AdaptivePolicy::kSinr;
      params.density = protocol.density.value_or(
          instance.sinr_density.value_or(inst.topology().MaxInDegree()));
      params.dilution = protocol.dilution.value_or(instance.sinr_dilution.value_or(1));
      return RunAdaptive(inst, params, seed, max_rounds);
    }
  }
  throw DomainError("unknown protocol");
}

SweepRow MakeRow(const SweepInstance& instance, const ProtocolSpec& protocol,
                 const RunRecord& record, std::size_t max_rounds) {
  SweepRow row;
  row.instance_id = instance.id;
  row.protocol = protocol.name();
  row.seed = record.seed;
  row.n = instance.instance.size();
  const auto done = record.CompletionRound();
  row.completed = done.has_value() && *done <= max_rounds;
  row.rounds = row.completed ? *done : max_rounds;
  return row;
}

SweepResult Sweep(const std::vector<SweepInstance>& instances,
                  const std::vector<ProtocolSpec>& protocols,
                  const std::vector<std::uint64_t>& seeds, const SweepOptions& options) {
  if (instances.empty() || protocols.empty() || seeds.empty()) {
    throw DomainError("sweep needs at least one instance, protocol and seed");
  }
  if (options.max_rounds == 0) throw DomainError("max_rounds must be >= 1");

  struct Task {
    std::size_t instance;
    std::size_t protocol;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (std::size_t p = 0; p < protocols.size(); ++p) {
      const bool single = options.collapse_unseeded && !protocols[p].seeded();
      for (std::size_t s = 0; s < (single ? 1 : seeds.size()); ++s) {
        tasks.push_back({i, p, seeds[s]});
      }
    }
  }

  SweepResult result;
  result.rows.resize(tasks.size());
  if (options.keep_records) result.records.resize(tasks.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      const Task& t = tasks[k];
      const SweepInstance& inst = instances[t.instance];
      const ProtocolSpec& proto = protocols[t.protocol];
      try {
        RunRecord record = RunProtocol(inst, proto, t.seed, options.max_rounds);
        result.rows[k] = MakeRow(inst, proto, record, options.max_rounds);
        if (options.keep_records) result.records[k] = std::move(record);
      } catch (const CapacityError& e) {
        result.rows[k] = SweepRow{inst.id, proto.name(), t.seed, inst.instance.size(),
                                  options.max_rounds, false, e.what()};
      } catch (const TerminationError& e) {
        result.rows[k] = SweepRow{inst.id, proto.name(), t.seed, inst.instance.size(),
                                  options.max_rounds, false, e.what()};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  std::size_t workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, tasks.size());
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

void WriteSweepCsv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "instance_id,protocol,seed,n,rounds,completed\n";
  for (const SweepRow& r : rows) {
    out << r.instance_id << ',' << r.protocol << ',' << r.seed << ',' << r.n << ',' << r.rounds
        << ',' << (r.completed ? "true" : "false") << '\n';
  }
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<SweepSummary> Summarize(const std::vector<SweepRow>& rows) {
  std::vector<SweepSummary> out;
  std::map<std::pair<std::string, std::string>, std::vector<const SweepRow*>> groups;
  for (const SweepRow& r : rows) {
    auto& g = groups[{r.instance_id, r.protocol}];
    if (g.empty()) out.push_back(SweepSummary{r.instance_id, r.protocol, r.n});
    g.push_back(&r);
  }
  for (SweepSummary& s : out) {
    const auto& g = groups[{s.instance_id, s.protocol}];
    std::vector<double> rounds;
    for (const SweepRow* r : g) {
      rounds.push_back(static_cast<double>(r->rounds));
      s.completed_runs += r->completed ? 1 : 0;
      s.max_rounds = std::max(s.max_rounds, r->rounds);
    }
    s.runs = g.size();
    s.mean_rounds = std::accumulate(rounds.begin(), rounds.end(), 0.0) /
                    static_cast<double>(rounds.size());
    s.median_rounds = Median(std::move(rounds));
  }
  return out;
}

}  // namespace affsel
