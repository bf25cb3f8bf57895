#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "mapcheck/Corpus.hpp"
#include "mapcheck/Execution.hpp"
#include "mapcheck/Parser.hpp"

using namespace mapcheck;

namespace {

// Independent oracle: recursively assign each read a source, then recursively
// build each location's write order. Executions are canonicalized as
// (rf pairs, mo pairs) sets for comparison with the implementation.
using Canonical = std::pair<std::set<Relation::Pair>, std::set<Relation::Pair>>;

void oracleMo(const EventGraph& g, const std::vector<std::string>& locs,
              std::size_t li, std::map<std::string, std::vector<EventId>>& acc,
              const std::set<Relation::Pair>& rf, std::set<Canonical>& out) {
  if (li == locs.size()) {
    std::set<Relation::Pair> mo;
    for (const auto& [loc, chain] : acc)
      for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = i + 1; j < chain.size(); ++j)
          mo.insert({chain[i], chain[j]});
    out.insert({rf, mo});
    return;
  }
  std::vector<EventId> rest;
  for (EventId w : g.writesTo(locs[li]))
    if (!g.at(w).isInit) rest.push_back(w);

  std::vector<EventId> chain{g.initWriteFor(locs[li])};
  std::sort(rest.begin(), rest.end());
  // all orderings of the non-init writes
  std::vector<bool> used(rest.size(), false);
  const std::function<void()> place = [&] {
    if (chain.size() == rest.size() + 1) {
      acc[locs[li]] = chain;
      oracleMo(g, locs, li + 1, acc, rf, out);
      return;
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      chain.push_back(rest[i]);
      place();
      chain.pop_back();
      used[i] = false;
    }
  };
  place();
}

void oracleRf(const EventGraph& g, const std::vector<EventId>& reads,
              std::size_t ri, std::set<Relation::Pair>& rf,
              std::set<Canonical>& out) {
  if (ri == reads.size()) {
    std::map<std::string, std::vector<EventId>> acc;
    oracleMo(g, g.locations(), 0, acc, rf, out);
    return;
  }
  for (EventId w : g.writesTo(g.at(reads[ri]).loc)) {
    rf.insert({w, reads[ri]});
    oracleRf(g, reads, ri + 1, rf, out);
    rf.erase({w, reads[ri]});
  }
}

std::set<Canonical> oracleEnumerate(const EventGraph& g) {
  std::set<Canonical> out;
  std::set<Relation::Pair> rf;
  oracleRf(g, g.reads(), 0, rf, out);
  return out;
}

Canonical canonical(const Execution& exec) {
  return {exec.rf.pairs(), exec.mo.pairs()};
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("enumeration counts frozen from the oracle") {
  // 4 reads x 2 same-location writes, mo forced: 2^4.
  CHECK(enumerateExecutions(std::get<C11Test>(corpusEntry("IRIW-acq-acq").test))
            .size() == 16);
  // 3 reads x 2 sources: 2^3.
  CHECK(enumerateExecutions(std::get<C11Test>(corpusEntry("RWC-acq").test))
            .size() == 8);
}

TEST_CASE("a test with no reads has exactly one execution") {
  const auto test = parseLitmus(
      "c11 test one-store\ninit x=0\nthread 0 { store(x, 1, relaxed); }\n"
      "allowed x=1\n");
  const auto execs = enumerateExecutions(std::get<C11Test>(test));
  REQUIRE(execs.size() == 1);
  CHECK(execs[0].rf.empty());
  CHECK(execs[0].finalValue("x") == 1);
  CHECK(satisfiesOutcome(execs[0], execs[0].g().outcome));
}

TEST_CASE("enumeration matches the recursive oracle on the corpus") {
  for (const CorpusEntry& entry : corpus()) {
    CAPTURE(entry.file);
    const EventGraph g = buildEvents(entry.test);
    const auto execs = enumerateExecutions(buildEvents(entry.test));

    std::set<Canonical> got;
    for (const Execution& e : execs) got.insert(canonical(e));
    CHECK(got.size() == execs.size());  // no duplicates
    CHECK(got == oracleEnumerate(g));

    // |executions| = prod over reads of #same-location writes
    //              x prod over locations of #orderings of non-init writes.
    std::size_t expected = 1;
    for (EventId r : g.reads()) expected *= g.writesTo(g.at(r).loc).size();
    for (const std::string& loc : g.locations())
      expected *= factorial(g.writesTo(loc).size() - 1);
    CHECK(execs.size() == expected);
  }
}

TEST_CASE("every enumerated execution is well-formed") {
  for (const CorpusEntry& entry : corpus()) {
    CAPTURE(entry.file);
    for (const Execution& exec : enumerateExecutions(buildEvents(entry.test))) {
      const EventGraph& g = exec.g();
      std::set<EventId> sourced;
      for (const auto& [w, r] : exec.rf.pairs()) {
        CHECK(g.at(w).isWrite());
        CHECK(g.at(r).isRead());
        CHECK(g.at(w).loc == g.at(r).loc);
        CHECK(exec.valueOf(r) == g.at(w).value);
        CHECK(sourced.insert(r).second);  // one source per read
      }
      CHECK(sourced.size() == g.reads().size());

      for (const std::string& loc : g.locations()) {
        const auto writes = g.writesTo(loc);
        const EventId init = g.initWriteFor(loc);
        for (EventId w : writes) {
          CHECK(!exec.mo.contains(w, w));
          if (w != init) CHECK(exec.mo.contains(init, w));
          for (EventId w2 : writes)
            if (w != w2)
              CHECK(exec.mo.contains(w, w2) != exec.mo.contains(w2, w));
        }
      }
    }
  }
}

TEST_CASE("outcome filtering") {
  const auto& iriw = std::get<C11Test>(corpusEntry("IRIW-acq-acq").test);
  const auto execs = enumerateExecutions(iriw);

  SUBCASE("the paper outcome pins a single execution") {
    const auto matched = filterOutcome(execs, iriw.outcome);
    REQUIRE(matched.size() == 1);
    // Values force rf: r1,r3 read the new stores; r2,r4 read the inits.
    CHECK(matched[0].rf == Relation{{2, 4}, {3, 6}, {1, 5}, {0, 7}});
  }

  SUBCASE("unsatisfiable outcome") {
    Outcome impossible = iriw.outcome;
    impossible.terms[0].value = 7;  // nothing ever writes 7
    CHECK(filterOutcome(execs, impossible).empty());
  }

  SUBCASE("filtering yields a subset") {
    const auto matched = filterOutcome(execs, iriw.outcome);
    CHECK(matched.size() <= execs.size());
  }

  SUBCASE("RWC outcome pins a single execution") {
    const auto& rwc = std::get<C11Test>(corpusEntry("RWC-acq").test);
    const auto matched = filterOutcome(enumerateExecutions(rwc), rwc.outcome);
    REQUIRE(matched.size() == 1);
    CHECK(matched[0].rf == Relation{{2, 3}, {1, 4}, {0, 6}});
  }
}

TEST_CASE("distinct values: at most one execution per full register outcome") {
  for (const CorpusEntry& entry : corpus()) {
    if (!std::holds_alternative<C11Test>(entry.test)) continue;
    CAPTURE(entry.file);
    const auto execs =
        enumerateExecutions(std::get<C11Test>(entry.test));
    std::map<std::map<std::string, int>, std::size_t> byRegisters;
    for (const Execution& e : execs) ++byRegisters[e.registers];
    for (const auto& [regs, count] : byRegisters) CHECK(count <= 1);
  }
}

TEST_CASE("fr relates reads to writes after their source") {
  SUBCASE("IRIW witness: f->d and h->c") {
    const auto& iriw = std::get<C11Test>(corpusEntry("IRIW-acq-acq").test);
    const auto witness =
        filterOutcome(enumerateExecutions(iriw), iriw.outcome).at(0);
    CHECK(computeFr(witness) == Relation{{5, 3}, {7, 2}});
  }
  SUBCASE("RWC witness: e->f and g->c") {
    const auto& rwc = std::get<C11Test>(corpusEntry("RWC-acq").test);
    const auto witness =
        filterOutcome(enumerateExecutions(rwc), rwc.outcome).at(0);
    CHECK(computeFr(witness) == Relation{{4, 5}, {6, 2}});
  }
  SUBCASE("reads of the mo-maximum have no fr edges") {
    const auto& iriw = std::get<C11Test>(corpusEntry("IRIW-acq-acq").test);
    for (const Execution& exec : enumerateExecutions(iriw)) {
      const Relation fr = computeFr(exec);
      for (EventId r : exec.g().reads()) {
        const EventId src = exec.rfSource(r);
        bool srcIsMax = true;
        for (EventId w : exec.g().writesTo(exec.g().at(r).loc))
          if (exec.mo.contains(src, w)) srcIsMax = false;
        if (!srcIsMax) continue;
        for (const auto& [a, b] : fr.pairs()) CHECK(a != r);
      }
    }
  }
}
