#ifndef MAPCHECK_EXECUTION_HPP
#define MAPCHECK_EXECUTION_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mapcheck/Events.hpp"

namespace mapcheck {

/// A candidate witness: one reads-from choice per read plus one per-location
/// modification order. Everything else (fr, register values, final memory) is
/// derived. Executions share their immutable EventGraph, so they are cheap to
/// copy and safe to hand to concurrent workers.
struct Execution {
  std::shared_ptr<const EventGraph> graph;
  Relation rf;  // write -> read, same location, one source per read
  Relation mo;  // per-location total order on writes, init first, closed
  std::map<std::string, int> registers;  // derived from rf

  const EventGraph& g() const { return *graph; }

  EventId rfSource(EventId read) const;
  int valueOf(EventId id) const;
  int finalValue(const std::string& loc) const;  // value at the mo-maximum
};

/// fr = rf^-1 ; mo : each read related to every write mo-after its source.
Relation computeFr(const Execution& exec);

/// All rf x mo combinations, eagerly: the Cartesian product of per-read
/// source choices (same-location writes, init included) and per-location
/// write permutations with the init write first. Deterministic order: reads
/// advance odometer-style by event id, then locations in init order.
std::vector<Execution> enumerateExecutions(EventGraph graph);
std::vector<Execution> enumerateExecutions(const C11Test& test);
std::vector<Execution> enumerateExecutions(const IsaTest& test);

bool satisfiesOutcome(const Execution& exec, const Outcome& outcome);

std::vector<Execution> filterOutcome(const std::vector<Execution>& execs,
                                     const Outcome& outcome);

}  // namespace mapcheck

#endif  // MAPCHECK_EXECUTION_HPP
