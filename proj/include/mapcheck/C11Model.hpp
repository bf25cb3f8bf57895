#ifndef MAPCHECK_C11MODEL_HPP
#define MAPCHECK_C11MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "mapcheck/Execution.hpp"

namespace mapcheck {

/// sw = { (w,r) in rf : w release or seq_cst, r acquire or seq_cst }.
/// Release sequences are collapsed to the release write itself; the corpus
/// has no RMWs, so nothing else could extend them.
Relation computeSw(const Execution& exec);

/// Init writes happen-before every program event. Kept as an explicit edge
/// set so the hb construction and the sc-read axiom see the same thing.
Relation initVisibility(const EventGraph& graph);

/// hb = (sb | sw | initVis)+.
Relation computeHb(const Execution& exec, const Relation& sw);

/// Coherence over hb and the extended coherence order eco = (rf|mo|fr)+.
/// An execution is incoherent iff some hb edge is opposed by an eco path;
/// the shape name classifies the endpoints (CoWW, CoWR, CoRW, CoRR).
/// See docs/model.md for the shape-by-shape reading.
struct CoherenceVerdict {
  bool ok = true;
  std::string shape;
  EventId first = -1;   // hb(first, second) ...
  EventId second = -1;  // ... with eco(second, first)
};
CoherenceVerdict checkCoherence(const Execution& exec, const Relation& hb);

/// Brute-force search for a valid total order on SC events: the first
/// permutation (lexicographic over event ids) that is consistent with
/// hb and mo restricted to SC x SC, and satisfies the restricted sc-read
/// axiom: every SC read takes the latest SC write to its location that is
/// sc-before it, or a non-SC write that does not happen-before that latest
/// SC write; with no prior SC write, any source is admitted.
/// Returns the empty order when there are no SC events.
std::optional<std::vector<EventId>> findScOrder(const Execution& exec,
                                                const Relation& hb);

/// Edges every valid sc order would have to contain. A cycle in their union
/// is a sound proof that findScOrder fails:
///   sc_hb = hb & (SC x SC)
///   sc_mo = mo & (SC x SC)
///   sc_fr = { (r,w') : rf(w,r), w mo w', r and w' SC, and (w SC or w hb w') }
struct ForcedScEdges {
  Relation scHb;
  Relation scMo;
  Relation scFr;
  std::optional<std::vector<EventId>> cycle;

  Relation all() const { return scHb | scMo | scFr; }
};
ForcedScEdges forcedScEdges(const Execution& exec, const Relation& hb);

/// Probes the loophole in the prior mapping-correctness proof: that proof
/// takes the sc order to be an arbitrary linearization of
/// (po|co|fr|erf restricted to SC x SC)*, which misses hb edges between SC
/// accesses that pass through an intermediate non-SC access. gap is set when
/// that relation is acyclic (a linearization exists) yet no real sc order
/// does.
struct BattyGapReport {
  bool scEventsPresent = false;
  bool linearizable = false;
  bool scOrderExists = false;
  bool gap = false;
};
BattyGapReport battyLinearizationGap(const Execution& exec,
                                     const Relation& hb);

struct C11Witness {
  Execution exec;
  Relation sw;
  Relation hb;
  // Present iff the execution is consistent and SC events exist.
  std::optional<std::vector<EventId>> scOrder;
  bool consistent = false;
  std::string reason;
};

/// Full consistency evaluation of one execution: hb irreflexivity,
/// coherence, then the sc-order search.
C11Witness evaluateC11(const Execution& exec);

enum class C11FailureKind { HbCycle, Coherence, NoScOrder };

struct C11ExecutionFailure {
  Execution exec;
  C11FailureKind kind = C11FailureKind::NoScOrder;
  std::string detail;
  // For coherent executions that lack an sc order: the diagnostic edges
  // and the proof-loophole probe.
  std::optional<ForcedScEdges> forced;
  std::optional<BattyGapReport> gapReport;
};

struct C11Result {
  bool allowed = false;
  std::optional<C11Witness> witness;          // set when allowed
  std::vector<C11ExecutionFailure> failures;  // one per outcome-matching exec
  std::size_t executionCount = 0;
  std::size_t matchingCount = 0;
};

/// The outcome is allowed iff some enumerated execution satisfies it and is
/// consistent. Forbidden results carry a per-execution failure breakdown.
C11Result c11Allows(const C11Test& test);

}  // namespace mapcheck

#endif  // MAPCHECK_C11MODEL_HPP
