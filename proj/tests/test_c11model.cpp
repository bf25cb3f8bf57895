#include "doctest.h"
#include "mapcheck/C11Model.hpp"
#include "mapcheck/Corpus.hpp"
#include "mapcheck/Parser.hpp"

using namespace mapcheck;

namespace {

Execution witnessOf(const std::string& corpusName) {
  const auto& test = std::get<C11Test>(corpusEntry(corpusName).test);
  auto matched = filterOutcome(enumerateExecutions(test), test.outcome);
  REQUIRE(matched.size() == 1);
  return matched.at(0);
}

}  // namespace

TEST_CASE("synchronizes-with") {
  SUBCASE("IRIW: the SC stores synchronize with the acquire loads") {
    const Execution w = witnessOf("IRIW-acq-acq");
    CHECK(computeSw(w) == Relation{{2, 4}, {3, 6}});  // c->e, d->g
  }
  SUBCASE("RWC: c->d") {
    const Execution w = witnessOf("RWC-acq");
    const Relation sw = computeSw(w);
    CHECK(sw.contains(2, 3));
  }
  SUBCASE("a relaxed store read by an acquire load gives no sw edge") {
    const auto test = std::get<C11Test>(parseLitmus(
        "c11 test rlx-acq\ninit x=0\nthread 0 { store(x, 1, relaxed); }\n"
        "thread 1 { r1 = load(x, acquire); }\nallowed r1=1\n"));
    const auto w = filterOutcome(enumerateExecutions(test), test.outcome).at(0);
    CHECK(computeSw(w).empty());
  }
}

TEST_CASE("happens-before") {
  SUBCASE("IRIW: c hb f through the sw;sb composition") {
    const Execution w = witnessOf("IRIW-acq-acq");
    const Relation hb = computeHb(w, computeSw(w));
    CHECK(hb.contains(2, 5));  // c -> e -> f
    CHECK(hb.contains(3, 7));  // d -> g -> h
  }
  SUBCASE("RWC: c hb e and f hb g") {
    const Execution w = witnessOf("RWC-acq");
    const Relation hb = computeHb(w, computeSw(w));
    CHECK(hb.contains(2, 4));
    CHECK(hb.contains(5, 6));
  }
  SUBCASE("without sw, hb crosses threads only from init writes") {
    const Execution w = witnessOf("SB-rlx");
    const Relation sw = computeSw(w);
    CHECK(sw.empty());
    const Relation hb = computeHb(w, sw);
    for (const auto& [a, b] : hb.pairs()) {
      if (w.g().at(a).thread != w.g().at(b).thread)
        CHECK(w.g().at(a).isInit);
    }
  }
  SUBCASE("hb is transitive") {
    const Execution w = witnessOf("IRIW-acq-acq");
    const Relation hb = computeHb(w, computeSw(w));
    CHECK(hb.plus() == hb);
  }
}

TEST_CASE("coherence") {
  SUBCASE("mo against sb is CoWW") {
    const auto test = std::get<C11Test>(parseLitmus(
        "c11 test coww\ninit x=0\n"
        "thread 0 { store(x, 1, relaxed); store(x, 2, relaxed); }\n"
        "allowed x=2\n"));
    // Two executions: mo in program order, and inverted.
    bool sawViolation = false;
    for (const Execution& exec : enumerateExecutions(test)) {
      const auto verdict = checkCoherence(exec, computeHb(exec, {}));
      if (exec.mo.contains(3, 2)) {
        CHECK(!verdict.ok);
        CHECK(verdict.shape == "CoWW");
        sawViolation = true;
      } else {
        CHECK(verdict.ok);
      }
    }
    CHECK(sawViolation);
  }

  SUBCASE("paper witnesses are coherent") {
    for (const char* name : {"IRIW-acq-acq", "RWC-acq"}) {
      const Execution w = witnessOf(name);
      CHECK(checkCoherence(w, computeHb(w, computeSw(w))).ok);
    }
  }

  SUBCASE("MP reading stale data after acquiring the flag is CoWR") {
    const auto& mp = std::get<C11Test>(corpusEntry("MP").test);
    bool sawStale = false;
    for (const Execution& exec : enumerateExecutions(mp)) {
      if (!satisfiesOutcome(exec, mp.outcome)) continue;  // r1=1, r2=0
      sawStale = true;
      const auto verdict = checkCoherence(exec, computeHb(exec, computeSw(exec)));
      CHECK(!verdict.ok);
      CHECK(verdict.shape == "CoWR");
    }
    CHECK(sawStale);
  }
}

TEST_CASE("sc order search") {
  SUBCASE("IRIW forbidden witness has no sc order") {
    const Execution w = witnessOf("IRIW-acq-acq");
    CHECK(!findScOrder(w, computeHb(w, computeSw(w))));
  }
  SUBCASE("RWC forbidden witness has no sc order") {
    const Execution w = witnessOf("RWC-acq");
    CHECK(!findScOrder(w, computeHb(w, computeSw(w))));
  }
  SUBCASE("at most one SC event is trivially orderable") {
    const auto test = std::get<C11Test>(parseLitmus(
        "c11 test one-sc\ninit x=0\nthread 0 { store(x, 1, seq_cst); }\n"
        "thread 1 { r1 = load(x, relaxed); }\nallowed r1=1\n"));
    const auto w = filterOutcome(enumerateExecutions(test), test.outcome).at(0);
    const auto order = findScOrder(w, computeHb(w, computeSw(w)));
    REQUIRE(order.has_value());
    CHECK(order->size() == 1);
  }
  SUBCASE("no SC events yields the empty order") {
    const Execution w = witnessOf("SB-rlx");
    const auto order = findScOrder(w, computeHb(w, computeSw(w)));
    REQUIRE(order.has_value());
    CHECK(order->empty());
  }
  SUBCASE("a found order respects sc_hb and sc_mo and is total") {
    const auto& sb = std::get<C11Test>(corpusEntry("SB").test);
    for (const Execution& exec : enumerateExecutions(sb)) {
      const Relation hb = computeHb(exec, computeSw(exec));
      if (!hb.irreflexive() || !checkCoherence(exec, hb).ok) continue;
      const auto order = findScOrder(exec, hb);
      if (!order) continue;
      std::map<EventId, std::size_t> pos;
      for (std::size_t i = 0; i < order->size(); ++i) pos[(*order)[i]] = i;
      for (const Event& e : exec.g().events)
        if (e.isSc()) CHECK(pos.count(e.id) == 1);
      const auto isSc = [&](EventId id) { return exec.g().at(id).isSc(); };
      for (const auto& [a, b] : hb.restrictedTo(isSc).pairs())
        CHECK(pos[a] < pos[b]);
      for (const auto& [a, b] : exec.mo.restrictedTo(isSc).pairs())
        CHECK(pos[a] < pos[b]);
    }
  }
}

TEST_CASE("forced sc edges") {
  SUBCASE("IRIW: sc_hb {c->f, d->h}, sc_fr {f->d, h->c}, cycle") {
    const Execution w = witnessOf("IRIW-acq-acq");
    const auto forced = forcedScEdges(w, computeHb(w, computeSw(w)));
    CHECK(forced.scHb == Relation{{2, 5}, {3, 7}});
    CHECK(forced.scFr == Relation{{5, 3}, {7, 2}});
    CHECK(forced.scMo.empty());
    CHECK(forced.cycle.has_value());
  }
  SUBCASE("RWC: sc_hb {c->e, f->g}, sc_fr {e->f, g->c}, cycle") {
    const Execution w = witnessOf("RWC-acq");
    const auto forced = forcedScEdges(w, computeHb(w, computeSw(w)));
    CHECK(forced.scHb == Relation{{2, 4}, {5, 6}});
    CHECK(forced.scFr == Relation{{4, 5}, {6, 2}});
    CHECK(forced.cycle.has_value());
  }
  SUBCASE("an all-relaxed execution has no forced edges") {
    const Execution w = witnessOf("SB-rlx");
    const auto forced = forcedScEdges(w, computeHb(w, computeSw(w)));
    CHECK(forced.all().empty());
    CHECK(!forced.cycle);
  }
}

TEST_CASE("forced-edge cycle implies no sc order, exhaustively") {
  for (const CorpusEntry& entry : corpus()) {
    if (!std::holds_alternative<C11Test>(entry.test)) continue;
    CAPTURE(entry.file);
    for (const Execution& exec :
         enumerateExecutions(std::get<C11Test>(entry.test))) {
      const Relation hb = computeHb(exec, computeSw(exec));
      if (!hb.irreflexive() || !checkCoherence(exec, hb).ok) continue;
      const auto forced = forcedScEdges(exec, hb);
      if (forced.cycle) CHECK(!findScOrder(exec, hb));
    }
  }
}

TEST_CASE("loophole probe") {
  SUBCASE("IRIW witness: linearizable yet unorderable") {
    const Execution w = witnessOf("IRIW-acq-acq");
    const auto rep = battyLinearizationGap(w, computeHb(w, computeSw(w)));
    CHECK(rep.scEventsPresent);
    CHECK(rep.linearizable);
    CHECK(!rep.scOrderExists);
    CHECK(rep.gap);
  }
  SUBCASE("RWC witness: gap as well") {
    const Execution w = witnessOf("RWC-acq");
    const auto rep = battyLinearizationGap(w, computeHb(w, computeSw(w)));
    CHECK(rep.gap);
  }
  SUBCASE("all-SC IRIW: the po edges surface, no gap") {
    const Execution w = witnessOf("IRIW-sc-sc");
    const auto rep = battyLinearizationGap(w, computeHb(w, computeSw(w)));
    CHECK(rep.scEventsPresent);
    CHECK(!rep.linearizable);
    CHECK(!rep.scOrderExists);
    CHECK(!rep.gap);
  }
  SUBCASE("degenerate without SC events") {
    const Execution w = witnessOf("SB-rlx");
    const auto rep = battyLinearizationGap(w, computeHb(w, computeSw(w)));
    CHECK(!rep.scEventsPresent);
    CHECK(!rep.gap);
  }
}

TEST_CASE("c11Allows verdicts") {
  SUBCASE("IRIW-acq-acq is forbidden") {
    const auto res =
        c11Allows(std::get<C11Test>(corpusEntry("IRIW-acq-acq").test));
    CHECK(!res.allowed);
    CHECK(res.executionCount == 16);
    CHECK(res.matchingCount == 1);
    REQUIRE(res.failures.size() == 1);
    CHECK(res.failures[0].kind == C11FailureKind::NoScOrder);
    REQUIRE(res.failures[0].forced.has_value());
    CHECK(res.failures[0].forced->cycle.has_value());
  }
  SUBCASE("RWC is forbidden") {
    CHECK(!c11Allows(std::get<C11Test>(corpusEntry("RWC-acq").test)).allowed);
  }
  SUBCASE("relaxed store buffering is allowed") {
    const auto res = c11Allows(std::get<C11Test>(corpusEntry("SB-rlx").test));
    CHECK(res.allowed);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->consistent);
    CHECK(!res.witness->scOrder.has_value());  // consistent but no SC events
    CHECK(satisfiesOutcome(res.witness->exec, res.witness->exec.g().outcome));
  }
  SUBCASE("witness invariants: sw inside rf and hb") {
    const auto res = c11Allows(std::get<C11Test>(corpusEntry("SB").test));
    for (const Execution& exec :
         enumerateExecutions(std::get<C11Test>(corpusEntry("SB").test))) {
      const Relation sw = computeSw(exec);
      const Relation hb = computeHb(exec, sw);
      for (const auto& [a, b] : sw.pairs()) {
        CHECK(exec.rf.contains(a, b));
        CHECK(hb.contains(a, b));
      }
    }
    CHECK(!res.allowed);  // all-SC SB forbids r1=0 & r2=0
  }
}

TEST_CASE("outcome weakening never flips allowed to forbidden") {
  for (const CorpusEntry& entry : corpus()) {
    if (!std::holds_alternative<C11Test>(entry.test)) continue;
    CAPTURE(entry.file);
    const auto& test = std::get<C11Test>(entry.test);
    const bool allowed = c11Allows(test).allowed;
    if (test.outcome.terms.size() < 2) continue;
    for (std::size_t drop = 0; drop < test.outcome.terms.size(); ++drop) {
      C11Test weaker = test;
      weaker.outcome.terms.erase(weaker.outcome.terms.begin() +
                                 static_cast<std::ptrdiff_t>(drop));
      if (allowed) CHECK(c11Allows(weaker).allowed);
    }
  }
}
