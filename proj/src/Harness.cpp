#include "mapcheck/Harness.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "mapcheck/Corpus.hpp"

namespace mapcheck {

namespace {

Verdict verdictFrom(const C11Result& res) {
  Verdict v;
  v.model = Verdict::Model::C11;
  v.allowed = res.allowed;
  v.executionCount = res.executionCount;
  v.matchingCount = res.matchingCount;
  if (res.allowed) {
    v.witness = res.witness->exec;
    v.reason = "consistent-witness";
  } else if (res.matchingCount == 0) {
    v.reason = "no execution matches the outcome";
  } else {
    std::ostringstream reasons;
    for (std::size_t i = 0; i < res.failures.size(); ++i) {
      if (i > 0) reasons << "; ";
      reasons << res.failures[i].detail;
    }
    v.reason = reasons.str();
  }
  return v;
}

}  // namespace

Verdict c11Verdict(const C11Test& test) { return verdictFrom(c11Allows(test)); }

Verdict hwVerdict(const IsaTest& test) {
  const HwResult res = hwAllows(test);
  Verdict v;
  v.model = Verdict::Model::Hw;
  v.arch = test.arch;
  v.allowed = res.allowed;
  v.witness = res.witness;
  v.reason = res.reason;
  v.executionCount = res.executionCount;
  v.matchingCount = res.matchingCount;
  return v;
}

Verdict checkTest(const LitmusTest& test) {
  if (const auto* c11 = std::get_if<C11Test>(&test)) return c11Verdict(*c11);
  return hwVerdict(std::get<IsaTest>(test));
}

CompareResult compare(const C11Test& test, const MappingTable& mapping) {
  CompareResult out;
  out.compiled = compile(test, mapping);
  const C11Result sourceResult = c11Allows(test);
  out.source = verdictFrom(sourceResult);
  out.target = hwVerdict(out.compiled);

  if (sourceResult.allowed) {
    out.sourceExec = sourceResult.witness->exec;
    out.sourceSw = sourceResult.witness->sw;
    out.sourceHb = sourceResult.witness->hb;
  } else {
    // Prefer the coherent-but-unorderable execution; it carries the
    // forced-edge cycle and the loophole probe.
    for (const C11ExecutionFailure& f : sourceResult.failures) {
      if (f.kind != C11FailureKind::NoScOrder && out.sourceExec) continue;
      out.sourceExec = f.exec;
      out.sourceSw = computeSw(f.exec);
      out.sourceHb = computeHb(f.exec, out.sourceSw);
      out.forcedCycle = f.forced;
      out.gapReport = f.gapReport;
      if (f.kind == C11FailureKind::NoScOrder) break;
    }
  }

  if (!out.source.allowed && out.target.allowed) {
    BugReport bug;
    bug.testName = test.name;
    bug.mappingName = mapping.name;
    bug.compiled = out.compiled;
    bug.source = out.source;
    bug.target = out.target;
    bug.sourceExec = out.sourceExec;
    bug.sourceSw = out.sourceSw;
    bug.sourceHb = out.sourceHb;
    bug.forcedCycle = out.forcedCycle;
    bug.gapReport = out.gapReport;
    out.bug = std::move(bug);
  }
  return out;
}

int defaultJobs() {
  const char* env = std::getenv("MAPCHECK_JOBS");
  if (env == nullptr) return 1;
  const int n = std::atoi(env);
  if (n < 1) return 1;
  return n > 64 ? 64 : n;
}

std::vector<SweepVariant> sweep(const C11Test& skeleton,
                                const std::vector<SweepPosition>& positions,
                                const std::vector<MemoryOrder>& orders,
                                int jobs) {
  if (positions.empty()) throw HarnessError("sweep needs at least one position");
  if (orders.empty()) throw HarnessError("sweep needs at least one order");
  for (const SweepPosition& p : positions) {
    if (p.thread < 0 || p.thread >= static_cast<int>(skeleton.threads.size()))
      throw HarnessError("invalid sweep position: no thread " +
                         std::to_string(p.thread));
    const auto& ops = skeleton.threads[p.thread];
    if (p.op < 0 || p.op >= static_cast<int>(ops.size()))
      throw HarnessError("invalid sweep position: thread " +
                         std::to_string(p.thread) + " has no op " +
                         std::to_string(p.op));
  }

  // Materialize all variants first; evaluation may then fan out to workers.
  std::vector<SweepVariant> variants;
  std::vector<std::size_t> choice(positions.size(), 0);
  while (true) {
    SweepVariant v;
    v.test = skeleton;
    std::ostringstream name;
    name << skeleton.name << '[';
    for (std::size_t i = 0; i < positions.size(); ++i) {
      const MemoryOrder order = orders[choice[i]];
      v.assignment.push_back(order);
      v.test.threads[positions[i].thread][positions[i].op].order = order;
      name << (i > 0 ? "," : "") << toString(order);
    }
    name << ']';
    v.name = name.str();
    v.test.name = v.name;
    validate(v.test);  // rejects e.g. release applied to a load position
    variants.push_back(std::move(v));

    std::size_t i = positions.size();
    while (i > 0) {
      --i;
      if (++choice[i] < orders.size()) break;
      choice[i] = 0;
      if (i == 0) {
        i = SIZE_MAX;
        break;
      }
    }
    if (i == SIZE_MAX) break;
  }

  const int workers = jobs > 0 ? jobs : defaultJobs();
  const auto evaluate = [](SweepVariant& v) {
    for (const MappingTable& mapping : mappingCatalog()) {
      const CompareResult cmp = compare(v.test, mapping);
      MappingOutcome mo;
      mo.mapping = mapping.name;
      mo.sourceForbidden = !cmp.source.allowed;
      mo.targetAllowed = cmp.target.allowed;
      mo.bug = cmp.bug.has_value();
      v.results.push_back(std::move(mo));
    }
  };

  if (workers <= 1 || variants.size() <= 1) {
    for (SweepVariant& v : variants) evaluate(v);
    return variants;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const int count = std::min<int>(workers, static_cast<int>(variants.size()));
  pool.reserve(count);
  for (int w = 0; w < count; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= variants.size()) return;
        evaluate(variants[i]);
      }
    });
  }
  for (std::thread& t : pool) t.join();
  return variants;
}

std::vector<CorpusCheck> runCorpus() {
  std::vector<CorpusCheck> out;
  for (const CorpusEntry& entry : corpus()) {
    CorpusCheck check;
    check.file = entry.file;
    check.name = testName(entry.test);
    Verdict v;
    if (const auto* c11 = std::get_if<C11Test>(&entry.test)) {
      check.level = TestLevel::C11;
      check.expectedForbidden = c11->outcome.expectForbidden;
      v = c11Verdict(*c11);
    } else {
      const IsaTest& isa = std::get<IsaTest>(entry.test);
      check.level = TestLevel::Isa;
      check.expectedForbidden = isa.outcome.expectForbidden;
      v = hwVerdict(isa);
    }
    check.actualForbidden = !v.allowed;
    check.pass = check.actualForbidden == check.expectedForbidden;
    check.reason = v.reason;
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace mapcheck
