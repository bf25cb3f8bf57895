#include "doctest.h"
#include "mapcheck/Corpus.hpp"
#include "mapcheck/Events.hpp"
#include "mapcheck/Parser.hpp"

using namespace mapcheck;

TEST_CASE("IRIW event structure") {
  const EventGraph g = buildEvents(corpusEntry("IRIW-acq-acq").test);
  REQUIRE(g.events.size() == 8);  // 2 init + 6 program events
  CHECK(g.initWrites.size() == 2);

  // Init events first, on the pseudo-thread, one write per location with the
  // initializer's value and relaxed order.
  for (EventId id : g.initWrites) {
    const Event& e = g.at(id);
    CHECK(e.thread == kInitThread);
    CHECK(e.isInit);
    CHECK(e.isWrite());
    CHECK(e.value == 0);
    CHECK(e.order == MemoryOrder::Relaxed);
  }
  CHECK(g.at(0).loc == "x");
  CHECK(g.at(1).loc == "y");

  // Ids are dense and deterministic; the letters line up with the usual
  // IRIW diagram (c,d writers; e..h readers).
  CHECK(g.at(2).isWrite());
  CHECK(g.at(2).thread == 0);
  CHECK(g.at(4).dest == "r1");
  CHECK(g.at(7).dest == "r4");
  CHECK(eventLabel(2) == "c");
  CHECK(eventLabel(7) == "h");

  // sb: exactly one pair per reading thread.
  CHECK(g.sb == Relation{{4, 5}, {6, 7}});
}

TEST_CASE("RWC sb has two pairs") {
  const EventGraph g = buildEvents(corpusEntry("RWC-acq").test);
  CHECK(g.events.size() == 7);
  CHECK(g.sb == Relation{{3, 4}, {5, 6}});
}

TEST_CASE("sb is stored transitively closed") {
  const auto test = parseLitmus(
      "c11 test chain\ninit x=0\n"
      "thread 0 { store(x, 1, relaxed); r1 = load(x, relaxed); "
      "store(x, 2, relaxed); }\n"
      "allowed r1=1\n");
  const EventGraph g = buildEvents(test);
  CHECK(g.sb == Relation{{1, 2}, {2, 3}, {1, 3}});
}

TEST_CASE("sb never crosses threads and is total per thread") {
  for (const CorpusEntry& entry : corpus()) {
    CAPTURE(entry.file);
    const EventGraph g = buildEvents(entry.test);
    for (const auto& [a, b] : g.sb.pairs()) {
      CHECK(g.at(a).thread == g.at(b).thread);
      CHECK(g.at(a).thread != kInitThread);
      CHECK(g.at(a).index < g.at(b).index);
    }
    for (const Event& a : g.events) {
      for (const Event& b : g.events) {
        if (a.thread != b.thread || a.id == b.id || a.thread == kInitThread)
          continue;
        CHECK(g.sb.contains(a.id, b.id) != g.sb.contains(b.id, a.id));
      }
    }
  }
}

TEST_CASE("ISA events include fences") {
  const EventGraph g =
      buildEvents(corpusEntry("IRIW-acq-acq-trailing-sync-power").test);
  CHECK(g.level == TestLevel::Isa);
  CHECK(g.arch == Arch::Power);
  std::size_t fences = 0;
  for (const Event& e : g.events)
    if (e.isFence()) ++fences;
  CHECK(fences == 8);  // 2 lwsync + 4 sync + 2 ctrlisync
  CHECK(g.events.size() == 2 + 14);
}
