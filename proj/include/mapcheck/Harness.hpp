#ifndef MAPCHECK_HARNESS_HPP
#define MAPCHECK_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mapcheck/C11Model.hpp"
#include "mapcheck/HwModel.hpp"
#include "mapcheck/Mapping.hpp"

namespace mapcheck {

struct HarnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One model's answer for one test's outcome. witness present iff allowed.
struct Verdict {
  enum class Model { C11, Hw };
  Model model = Model::C11;
  std::optional<Arch> arch;  // hw only
  bool allowed = false;
  std::optional<Execution> witness;
  std::string reason;
  std::size_t executionCount = 0;
  std::size_t matchingCount = 0;
};

Verdict c11Verdict(const C11Test& test);
Verdict hwVerdict(const IsaTest& test);
Verdict checkTest(const LitmusTest& test);

/// Emitted only when the source outcome is forbidden at the C11 level but
/// allowed for the compiled program: a mapping bug.
struct BugReport {
  std::string testName;
  std::string mappingName;
  IsaTest compiled;
  Verdict source;  // forbidden
  Verdict target;  // allowed, with witness
  // Diagnostics from the canonical forbidden-outcome execution (the corpus
  // discipline of distinct store values makes it unique in practice).
  std::optional<Execution> sourceExec;
  Relation sourceSw, sourceHb;
  std::optional<ForcedScEdges> forcedCycle;
  std::optional<BattyGapReport> gapReport;
};

struct CompareResult {
  Verdict source;
  Verdict target;
  IsaTest compiled;
  // The canonical outcome execution on the C11 side (the witness when
  // allowed, else the first failing execution) and its diagnostics; feeds
  // the DOT emitter.
  std::optional<Execution> sourceExec;
  Relation sourceSw, sourceHb;
  std::optional<ForcedScEdges> forcedCycle;
  std::optional<BattyGapReport> gapReport;
  std::optional<BugReport> bug;
};

CompareResult compare(const C11Test& test, const MappingTable& mapping);

struct SweepPosition {
  int thread = 0;
  int op = 0;
};

struct MappingOutcome {
  std::string mapping;
  bool sourceForbidden = false;
  bool targetAllowed = false;
  bool bug = false;
};

struct SweepVariant {
  std::string name;
  std::vector<MemoryOrder> assignment;  // parallel to the swept positions
  C11Test test;
  std::vector<MappingOutcome> results;  // catalog order
};

/// Cartesian product of order assignments over the given load/store
/// positions; every variant is compared under every catalog mapping. Results
/// are in a fixed order (assignments advance odometer-style, last position
/// fastest) regardless of how many workers run. jobs <= 0 reads
/// MAPCHECK_JOBS, defaulting to 1.
std::vector<SweepVariant> sweep(const C11Test& skeleton,
                                const std::vector<SweepPosition>& positions,
                                const std::vector<MemoryOrder>& orders,
                                int jobs = 0);

int defaultJobs();

struct CorpusCheck {
  std::string file;
  std::string name;
  TestLevel level = TestLevel::C11;
  bool expectedForbidden = false;
  bool actualForbidden = false;
  bool pass = false;
  std::string reason;
};

/// Evaluates every bundled test against the expectation stated in its
/// outcome line (C11 model for c11 tests, hardware model for isa tests).
std::vector<CorpusCheck> runCorpus();

}  // namespace mapcheck

#endif  // MAPCHECK_HARNESS_HPP
