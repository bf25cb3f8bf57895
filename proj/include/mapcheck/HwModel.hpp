#ifndef MAPCHECK_HWMODEL_HPP
#define MAPCHECK_HWMODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "mapcheck/Execution.hpp"

namespace mapcheck {

/// Derived relations of the axiomatic Power/ARMv7 model. One parameterized
/// model covers both architectures: dmbish gets sync semantics, ctrlisb gets
/// ctrlisync semantics, and ARMv7 simply never emits lwsync. Fence events
/// participate in program order only; "across a fence" below means the fence
/// sits po-between the two accesses on their common thread.
///
///   ppo      = load -> every later same-thread access, when a ctrlisync/
///              ctrlisb immediately follows the load
///   lwfence  = access pairs across an lwsync, minus write->read pairs
///   ffence   = access pairs across a sync/dmbish
///   hbHw     = ppo | lwfence | ffence | rfe
///   propBase = (fence | rfe;fence) ; hbHw*        with fence = lwfence|ffence
///   prop     = (propBase & WxW) | (com* ; propBase* ; ffence ; hbHw*)
struct HwRelations {
  Relation po;       // program order incl. fence events
  Relation poLoc;    // same-location access pairs of po
  Relation rf, rfe, rfi;
  Relation co;       // modification order incl. init writes
  Relation fr, fre;
  Relation com;      // rf | co | fr
  Relation ppo;
  Relation lwfence, ffence, fence;
  Relation hbHw;
  Relation propBase, prop;
};

/// Throws ValidationError if a ctrlisync/ctrlisb does not immediately follow
/// a load (programmatically built tests can get this wrong; parsed ones
/// cannot).
HwRelations hwRelations(const Execution& exec);

/// consistent iff  acyclic(poLoc | com)          -- sc per location
///             and acyclic(hbHw)                 -- no thin air
///             and irreflexive(fre;prop;hbHw*)   -- observation
///             and acyclic(co | prop)            -- propagation
struct HwVerdict {
  bool consistent = true;
  std::string axiom;           // violated axiom when inconsistent
  std::vector<EventId> cycle;  // witness cycle (reflexive pair: one node)
};
HwVerdict hwConsistent(const Execution& exec);

struct HwResult {
  bool allowed = false;
  std::optional<Execution> witness;        // set when allowed
  std::string reason;                      // axiom summary when forbidden
  std::vector<std::string> failureAxioms;  // per outcome-matching execution
  std::size_t executionCount = 0;
  std::size_t matchingCount = 0;
};

/// The ISA outcome is allowed iff some enumerated execution satisfies it and
/// passes all four axioms.
HwResult hwAllows(const IsaTest& test);

}  // namespace mapcheck

#endif  // MAPCHECK_HWMODEL_HPP
