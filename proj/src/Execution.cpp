#include "mapcheck/Execution.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mapcheck {

EventId Execution::rfSource(EventId read) const {
  for (const auto& [w, r] : rf.pairs())
    if (r == read) return w;
  throw std::out_of_range("read " + eventLabel(read) + " has no rf source");
}

int Execution::valueOf(EventId id) const {
  const Event& e = g().at(id);
  if (e.isWrite()) return e.value;
  if (e.isRead()) return g().at(rfSource(id)).value;
  throw std::invalid_argument("fence events carry no value");
}

int Execution::finalValue(const std::string& loc) const {
  const auto writes = g().writesTo(loc);
  assert(!writes.empty());
  // mo is total per location, so the maximum is the write with no successor.
  for (EventId w : writes) {
    bool hasSucc = false;
    for (EventId w2 : writes)
      if (mo.contains(w, w2)) hasSucc = true;
    if (!hasSucc) return g().at(w).value;
  }
  throw std::logic_error("mo has no maximum for '" + loc + "'");
}

Relation computeFr(const Execution& exec) {
  return seq(exec.rf.inverse(), exec.mo);
}

namespace {

void deriveRegisters(Execution& exec) {
  for (EventId r : exec.g().reads()) {
    const Event& e = exec.g().at(r);
    if (!e.dest.empty()) exec.registers[e.dest] = exec.valueOf(r);
  }
}

}  // namespace

std::vector<Execution> enumerateExecutions(EventGraph graph) {
  auto shared = std::make_shared<const EventGraph>(std::move(graph));
  const EventGraph& g = *shared;

  const std::vector<EventId> reads = g.reads();
  std::vector<std::vector<EventId>> sources;  // per read, candidate writes
  for (EventId r : reads) sources.push_back(g.writesTo(g.at(r).loc));

  // Per location, the non-init writes to permute after the init write.
  const std::vector<std::string> locs = g.locations();
  std::vector<std::vector<EventId>> moTails;
  for (const std::string& loc : locs) {
    std::vector<EventId> tail;
    for (EventId w : g.writesTo(loc))
      if (!g.at(w).isInit) tail.push_back(w);
    std::sort(tail.begin(), tail.end());
    moTails.push_back(std::move(tail));
  }

  std::vector<Execution> out;

  std::vector<std::size_t> choice(reads.size(), 0);
  while (true) {
    Relation rf;
    for (std::size_t i = 0; i < reads.size(); ++i)
      rf.insert(sources[i][choice[i]], reads[i]);

    // All per-location linear orders, init first.
    std::vector<std::vector<EventId>> perms = moTails;
    while (true) {
      Execution exec;
      exec.graph = shared;
      exec.rf = rf;
      for (std::size_t l = 0; l < locs.size(); ++l) {
        std::vector<EventId> chain;
        chain.push_back(g.initWriteFor(locs[l]));
        chain.insert(chain.end(), perms[l].begin(), perms[l].end());
        for (std::size_t i = 0; i < chain.size(); ++i)
          for (std::size_t j = i + 1; j < chain.size(); ++j)
            exec.mo.insert(chain[i], chain[j]);
      }
      deriveRegisters(exec);
      out.push_back(std::move(exec));

      // Advance the mo odometer: last location's permutation varies fastest.
      std::size_t l = perms.size();
      while (l > 0) {
        --l;
        if (std::next_permutation(perms[l].begin(), perms[l].end())) break;
        // wrapped to sorted order; carry to the previous location
        if (l == 0) {
          l = SIZE_MAX;
          break;
        }
      }
      if (perms.empty() || l == SIZE_MAX) break;
    }

    // Advance the rf odometer: last read's source varies fastest.
    std::size_t i = reads.size();
    while (i > 0) {
      --i;
      if (++choice[i] < sources[i].size()) break;
      choice[i] = 0;
      if (i == 0) {
        i = SIZE_MAX;
        break;
      }
    }
    if (reads.empty() || i == SIZE_MAX) break;
  }
  return out;
}

std::vector<Execution> enumerateExecutions(const C11Test& test) {
  return enumerateExecutions(buildEvents(test));
}

std::vector<Execution> enumerateExecutions(const IsaTest& test) {
  return enumerateExecutions(buildEvents(test));
}

bool satisfiesOutcome(const Execution& exec, const Outcome& outcome) {
  for (const OutcomeTerm& term : outcome.terms) {
    if (term.kind == OutcomeTerm::Kind::Register) {
      auto it = exec.registers.find(term.name);
      if (it == exec.registers.end() || it->second != term.value) return false;
    } else {
      if (exec.finalValue(term.name) != term.value) return false;
    }
  }
  return true;
}

std::vector<Execution> filterOutcome(const std::vector<Execution>& execs,
                                     const Outcome& outcome) {
  std::vector<Execution> out;
  for (const Execution& exec : execs)
    if (satisfiesOutcome(exec, outcome)) out.push_back(exec);
  return out;
}

}  // namespace mapcheck
