#include "affsel/schedule.h"

#include <istream>
#include <ostream>
#include <sstream>

#include "affsel/errors.h"

namespace affsel {

Schedule::Schedule(std::size_t n, std::vector<TransmitterSet> slots) : n_(n) {
  for (auto& s : slots) Append(std::move(s));
}

void Schedule::Append(TransmitterSet slot) {
  if (slot.universe() != n_) {
    throw DomainError("slot universe " + std::to_string(slot.universe()) +
                      " does not match schedule n=" + std::to_string(n_));
  }
  slots_.push_back(std::move(slot));
}

void WriteSchedule(std::ostream& out, const Schedule& schedule) {
  out << "slots=" << schedule.length() << " n=" << schedule.transmitters() << '\n';
  for (const auto& slot : schedule.slots()) {
    bool first = true;
    for (NodeIndex v : slot.Members()) {
      if (!first) out << ' ';
      out << v + 1;
      first = false;
    }
    out << '\n';
  }
}

std::string FormatSchedule(const Schedule& schedule) {
  std::ostringstream os;
  WriteSchedule(os, schedule);
  return os.str();
}

Schedule ReadSchedule(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("schedule: missing header");
  std::size_t slots = 0;
  std::size_t n = 0;
  {
    std::istringstream hs(line);
    std::string a, b;
    hs >> a >> b;
    if (a.rfind("slots=", 0) != 0 || b.rfind("n=", 0) != 0) {
      throw ParseError("schedule line 1: expected 'slots=<s> n=<n>'");
    }
    try {
      slots = std::stoul(a.substr(6));
      n = std::stoul(b.substr(2));
    } catch (const std::exception&) {
      throw ParseError("schedule line 1: bad header numbers");
    }
  }
  Schedule schedule(n);
  for (std::size_t j = 0; j < slots; ++j) {
    if (!std::getline(in, line)) {
      throw ParseError("schedule: expected " + std::to_string(slots) + " slot lines, got " +
                       std::to_string(j));
    }
    std::istringstream ls(line);
    TransmitterSet slot(n);
    long long label = 0;
    while (ls >> label) {
      if (label < 1 || static_cast<std::size_t>(label) > n) {
        throw ParseError("schedule line " + std::to_string(j + 2) + ": transmitter " +
                         std::to_string(label) + " out of range");
      }
      slot.Insert(static_cast<NodeIndex>(label - 1));
    }
    if (!ls.eof()) {
      throw ParseError("schedule line " + std::to_string(j + 2) + ": not an integer list");
    }
    schedule.Append(std::move(slot));
  }
  return schedule;
}

Schedule ParseSchedule(const std::string& text) {
  std::istringstream is(text);
  return ReadSchedule(is);
}

}  // namespace affsel
