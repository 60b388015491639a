#include "cli.h"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "affsel/characterization.h"
#include "affsel/deterministic.h"
#include "affsel/errors.h"
#include "affsel/instance_io.h"
#include "affsel/office_grid.h"
#include "affsel/predicates.h"
#include "affsel/randomized.h"
#include "affsel/schedule.h"
#include "affsel/simulator.h"
#include "affsel/sweep.h"
#include "affsel/synthetic.h"

namespace affsel::cli {

namespace {

struct Options {
  // Instance source.
  std::vector<std::string> instances;
  std::string scenario;
  std::string offices;
  std::size_t nodes_per_office = 0;
  std::size_t rn_n = 0;
  std::size_t max_degree = 0;

  // Protocols and parameters.
  std::vector<std::string> protocols;
  std::optional<double> c;
  std::optional<std::size_t> m_override;
  std::optional<std::size_t> density;
  std::optional<std::size_t> dilution;
  bool fallback = false;
  std::string mode = "exact";
  std::size_t mc_samples = 4096;

  // Runs.
  std::uint64_t seed = 1;
  std::size_t seeds = 10;
  std::uint64_t seed_base = 1;
  std::size_t max_rounds = kDefaultMaxRounds;
  std::size_t workers = 0;
  std::string out;
};

// Output goes to --out when given, else to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParseError("cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

OfficeGridSpec OfficeSpecFrom(const Options& o) {
  OfficeGridSpec spec = o.scenario.empty() ? OfficeGridSpec{} : LoadOfficeGridSpec(o.scenario);
  if (o.nodes_per_office) spec.nodes_per_office = o.nodes_per_office;
  return spec;
}

SweepInstance OfficeInstance(OfficeGridSpec spec) {
  spec.Validate();
  return SweepInstance{"office-n" + std::to_string(spec.n()), GenerateOfficeLayer(spec).instance,
                       DefaultSinrDensity(spec), DefaultSinrDilution(spec)};
}

SweepInstance FileInstance(const std::string& path) {
  return SweepInstance{std::filesystem::path(path).stem().string(), LoadInstance(path),
                       std::nullopt, std::nullopt};
}

// Exactly one instance: --instance, --rn, or an office scenario.
SweepInstance SingleInstance(const Options& o) {
  if (o.instances.size() > 1) throw ParseError("expected a single --instance");
  if (!o.instances.empty()) return FileInstance(o.instances.front());
  if (o.rn_n) {
    return SweepInstance{"rn-n" + std::to_string(o.rn_n),
                         GenerateRnInstance(o.rn_n, o.max_degree ? o.max_degree : o.rn_n, o.seed),
                         std::nullopt, std::nullopt};
  }
  if (o.scenario.empty() && o.offices.empty()) {
    throw ParseError("need --instance, --scenario, --offices or --rn");
  }
  OfficeGridSpec spec = OfficeSpecFrom(o);
  if (!o.offices.empty()) {
    const auto counts = ParseCountList(o.offices);
    if (counts.size() != 1) throw ParseError("expected a single --offices value");
    spec.offices = counts.front();
  }
  return OfficeInstance(spec);
}

ProtocolSpec MakeProtocol(const std::string& name, const Options& o) {
  auto kind = ParseProtocolKind(name);
  if (!kind) throw ParseError("unknown protocol '" + name + "'");
  ProtocolSpec p;
  p.kind = *kind;
  p.c = o.c;
  p.m_override = o.m_override;
  p.fallback_mode = o.fallback;
  p.density = o.density;
  p.dilution = o.dilution;
  p.mc_samples = o.mc_samples;
  if (o.mode == "exact") p.mode = ExpectationMode::kExact;
  else if (o.mode == "mc") p.mode = ExpectationMode::kMonteCarlo;
  else throw ParseError("--mode must be exact or mc");
  return p;
}

RandomizedParams RandomizedFor(const Instance& inst, const ProtocolSpec& p, std::uint64_t seed) {
  return RandomizedParams{Characterize(inst, p.c), seed, p.fallback_mode, p.m_override};
}

Schedule BuildSchedule(const Instance& inst, const ProtocolSpec& p, std::uint64_t seed) {
  switch (p.kind) {
    case ProtocolKind::kRandomized:
      return RandomizedSchedule(RandomizedFor(inst, p, seed), inst.size());
    case ProtocolKind::kDeterministic: {
      DeterministicOptions options;
      options.mode = p.mode;
      options.mc_samples = p.mc_samples;
      options.mc_seed = seed;
      return DeterministicSchedule(inst, Characterize(inst, p.c), options);
    }
    default:
      throw ParseError("schedule needs --protocol randomized or deterministic");
  }
}

void PrintReceiverList(std::ostream& os, const std::vector<NodeIndex>& ws) {
  os << '{';
  for (std::size_t k = 0; k < ws.size(); ++k) os << (k ? "," : "") << ws[k] + 1;
  os << '}';
}

int CmdGenerate(const Options& o, std::ostream& out) {
  Instance inst = SingleInstance(o).instance;
  Sink sink(o.out, out);
  sink.get() << FormatInstance(inst);
  return kOk;
}

int CmdCharacterize(const Options& o, std::ostream& out) {
  const SweepInstance si = SingleInstance(o);
  const Instance& inst = si.instance;
  const Characterization ch = Characterize(inst, o.c);
  out << std::setprecision(12);
  out << "instance " << si.id << "  n=" << ch.n << '\n';
  out << "receiver  senders  abar_w\n";
  for (NodeIndex w = 0; w < ch.n; ++w) {
    out << std::setw(8) << w + 1 << "  " << std::setw(7) << inst.topology().Senders(w).size()
        << "  " << ch.abar_w[w] << '\n';
  }
  out << "abar        " << ch.abar << '\n'
      << "c_min       " << ch.c_min << '\n'
      << "c           " << ch.c << '\n'
      << "b           " << ch.b << '\n'
      << "d           " << ch.d << '\n'
      << "m           " << ch.m << '\n'
      << "phases      " << ch.phases << '\n'
      << "slot_bound  " << ch.SlotBound() << '\n';
  return kOk;
}

int CmdSchedule(const Options& o, std::ostream& out) {
  const SweepInstance si = SingleInstance(o);
  const std::string name = o.protocols.empty() ? "randomized" : o.protocols.front();
  const ProtocolSpec p = MakeProtocol(name, o);
  const Schedule schedule = BuildSchedule(si.instance, p, o.seed);
  const SelectivityReport report = VerifySelective(si.instance, schedule);
  if (!o.out.empty()) {
    Sink sink(o.out, out);
    WriteSchedule(sink.get(), schedule);
  } else {
    WriteSchedule(out, schedule);
  }
  out << "# protocol=" << name << " slots=" << schedule.length() << " covered="
      << report.covered.size() << '/' << si.instance.size() << " uncovered=";
  PrintReceiverList(out, report.uncovered);
  out << " selective=" << (report.selective() ? "yes" : "no") << '\n';
  return report.selective() ? kOk : kCapacityOrTruncation;
}

int CmdSimulate(const Options& o, std::ostream& out) {
  const SweepInstance si = SingleInstance(o);
  const std::string name = o.protocols.empty() ? "randomized" : o.protocols.front();
  const ProtocolSpec p = MakeProtocol(name, o);
  const RunRecord record = RunProtocol(si, p, o.seed, o.max_rounds);
  Sink sink(o.out, out);
  WriteRunRecordJson(sink.get(), record);
  const SweepRow row = MakeRow(si, p, record, o.max_rounds);
  if (!o.out.empty()) {
    out << "protocol=" << row.protocol << " rounds=" << row.rounds
        << " completed=" << (row.completed ? "true" : "false") << '\n';
  }
  return row.completed ? kOk : kCapacityOrTruncation;
}

int CmdSweep(const Options& o, std::ostream& out) {
  std::vector<SweepInstance> instances;
  for (const auto& path : o.instances) instances.push_back(FileInstance(path));
  if (!o.scenario.empty() || !o.offices.empty()) {
    const OfficeGridSpec base = OfficeSpecFrom(o);
    const std::vector<std::size_t> counts =
        o.offices.empty() ? std::vector<std::size_t>{base.offices} : ParseCountList(o.offices);
    for (std::size_t k : counts) {
      OfficeGridSpec spec = base;
      spec.offices = k;
      instances.push_back(OfficeInstance(spec));
    }
  }
  if (instances.empty()) throw ParseError("sweep needs --instance, --scenario or --offices");

  std::vector<std::string> names = o.protocols;
  if (names.empty()) names = {"randomized", "decay", "sinr"};
  std::vector<ProtocolSpec> protocols;
  for (const auto& name : names) protocols.push_back(MakeProtocol(name, o));
  if (o.seeds == 0) throw ParseError("--seeds must be >= 1");
  std::vector<std::uint64_t> seeds;
  for (std::size_t k = 0; k < o.seeds; ++k) seeds.push_back(o.seed_base + k);

  SweepOptions options;
  options.max_rounds = o.max_rounds;
  options.workers = o.workers;
  options.collapse_unseeded = true;
  const SweepResult result = Sweep(instances, protocols, seeds, options);

  if (!o.out.empty()) {
    Sink sink(o.out, out);
    WriteSweepCsv(sink.get(), result.rows);
  } else {
    WriteSweepCsv(out, result.rows);
  }

  // Theoretical slot bound for the randomized protocol, per instance.
  std::map<std::string, std::size_t> bound;
  for (const auto& si : instances) {
    for (const auto& p : protocols) {
      if (p.kind != ProtocolKind::kRandomized) continue;
      const RandomizedParams params = RandomizedFor(si.instance, p, 0);
      bound[si.id] = RandomizedPhases(params, si.instance.size()) * RandomizedMultiplicity(params);
    }
  }
  std::ostream& summary = o.out.empty() ? std::cerr : out;
  summary << std::fixed << std::setprecision(1);
  summary << "instance_id,protocol,n,runs,completed,mean_rounds,median_rounds,max_rounds,bound\n";
  for (const SweepSummary& s : Summarize(result.rows)) {
    summary << s.instance_id << ',' << s.protocol << ',' << s.n << ',' << s.runs << ','
            << s.completed_runs << ',' << s.mean_rounds << ',' << s.median_rounds << ','
            << s.max_rounds << ',';
    if (s.protocol == "randomized" && bound.count(s.instance_id)) summary << bound[s.instance_id];
    summary << '\n';
  }
  summary << std::defaultfloat;

  bool any_error = false;
  bool all_complete = true;
  for (const SweepRow& r : result.rows) {
    if (!r.error.empty()) {
      any_error = true;
      std::cerr << "run failed: " << r.instance_id << ' ' << r.protocol << " seed=" << r.seed
                << ": " << r.error << '\n';
    }
    all_complete = all_complete && r.completed;
  }
  return (any_error || !all_complete) ? kCapacityOrTruncation : kOk;
}

void AddSource(CLI::App* cmd, Options& o, bool many) {
  if (many) {
    cmd->add_option("--instance", o.instances, "Instance file (repeatable)");
  } else {
    cmd->add_option("--instance", o.instances, "Instance file")->expected(1);
  }
  cmd->add_option("--scenario", o.scenario, "Office grid scenario spec (JSON)");
  cmd->add_option("--offices", o.offices,
                  many ? "Office counts, e.g. 2..14 or 2,4,6" : "Number of offices");
  cmd->add_option("--nodes-per-office", o.nodes_per_office, "Override nodes per office");
}

void AddProtocolParams(CLI::App* cmd, Options& o) {
  cmd->add_option("--c", o.c, "Constant c > 1 (default: tightened c_min)");
  cmd->add_option("--m-override", o.m_override, "Slots per phase for the randomized protocol")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--fallback", o.fallback, "Randomized: phases from n instead of abar");
  cmd->add_option("--density", o.density, "SINR baseline density")->check(CLI::PositiveNumber);
  cmd->add_option("--dilution", o.dilution, "SINR baseline dilution")->check(CLI::PositiveNumber);
  cmd->add_option("--mode", o.mode, "Deterministic expectation engine: exact|mc")
      ->check(CLI::IsMember({"exact", "mc"}));
  cmd->add_option("--mc-samples", o.mc_samples, "Monte Carlo samples per expectation")
      ->check(CLI::PositiveNumber);
}

}  // namespace

std::vector<std::size_t> ParseCountList(const std::string& text) {
  auto number = [&](const std::string& s) -> std::size_t {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(s, &used);
      if (used != s.size() || v == 0) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ParseError("bad count list '" + text + "'");
    }
  };
  std::vector<std::size_t> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const std::size_t lo = number(text.substr(0, dots));
    const std::size_t hi = number(text.substr(dots + 2));
    if (hi < lo) throw ParseError("bad count range '" + text + "'");
    for (std::size_t k = lo; k <= hi; ++k) out.push_back(k);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(number(item));
  if (out.empty()) throw ParseError("empty count list");
  return out;
}

int Main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Layer dissemination scheduling under additive affectance"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "Write an instance file");
  AddSource(gen, o, false);
  gen->add_option("--rn", o.rn_n, "Random Radio-Network instance with n nodes");
  gen->add_option("--max-degree", o.max_degree, "Max receiver degree for --rn");
  gen->add_option("--seed", o.seed, "Generator seed");
  gen->add_option("--out", o.out, "Output path (default stdout)");

  auto* chz = app.add_subcommand("characterize", "Print abar_w, abar, c, b, d, m, phases");
  AddSource(chz, o, false);
  chz->add_option("--rn", o.rn_n, "Random Radio-Network instance with n nodes");
  chz->add_option("--max-degree", o.max_degree, "Max receiver degree for --rn");
  chz->add_option("--seed", o.seed, "Generator seed for --rn");
  chz->add_option("--c", o.c, "Constant c > 1");

  auto* sch = app.add_subcommand("schedule", "Build a schedule and verify it");
  AddSource(sch, o, false);
  AddProtocolParams(sch, o);
  sch->add_option("--protocol", o.protocols, "randomized|deterministic")->expected(1);
  sch->add_option("--seed", o.seed, "Seed (randomized protocol, mc mode)");
  sch->add_option("--out", o.out, "Schedule output path (default stdout)");

  auto* sim = app.add_subcommand("simulate", "Run one protocol and dump the RunRecord");
  AddSource(sim, o, false);
  AddProtocolParams(sim, o);
  sim->add_option("--protocol", o.protocols, "randomized|deterministic|decay|sinr")->expected(1);
  sim->add_option("--seed", o.seed, "Run seed");
  sim->add_option("--max-rounds", o.max_rounds, "Round cap for adaptive baselines")
      ->check(CLI::PositiveNumber);
  sim->add_option("--out", o.out, "RunRecord JSON path (default stdout)");

  auto* swp = app.add_subcommand("sweep", "Run the instance x protocol x seed sweep");
  AddSource(swp, o, true);
  AddProtocolParams(swp, o);
  swp->add_option("--protocol", o.protocols, "Protocol (repeatable; default randomized,decay,sinr)");
  swp->add_option("--seeds", o.seeds, "Number of seeds");
  swp->add_option("--seed-base", o.seed_base, "First seed");
  swp->add_option("--max-rounds", o.max_rounds, "Round cap")->check(CLI::PositiveNumber);
  swp->add_option("--workers", o.workers, "Worker threads (0 = hardware)");
  swp->add_option("--out", o.out, "CSV path (default stdout; summary then goes to stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kValidationError;
  }

  try {
    if (*gen) return CmdGenerate(o, out);
    if (*chz) return CmdCharacterize(o, out);
    if (*sch) return CmdSchedule(o, out);
    if (*sim) return CmdSimulate(o, out);
    if (*swp) return CmdSweep(o, out);
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kCapacityOrTruncation;
  } catch (const TerminationError& e) {
    err << "termination: " << e.what() << '\n';
    return kCapacityOrTruncation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
  return kValidationError;
}

int Main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage = args;
  storage.insert(storage.begin(), "affsel");
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  return Main(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace affsel::cli
