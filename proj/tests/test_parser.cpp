#include "doctest.h"
#include "mapcheck/Corpus.hpp"
#include "mapcheck/Parser.hpp"

using namespace mapcheck;

namespace {

const char* kIriwSource = R"(
c11 test IRIW-acq-acq
init x=0 y=0
thread 0 { store(x, 1, seq_cst); }
thread 1 { store(y, 1, seq_cst); }
thread 2 {
  r1 = load(x, acquire);
  r2 = load(y, seq_cst);
}
thread 3 {
  r3 = load(y, acquire);
  r4 = load(x, seq_cst);
}
forbidden r1=1 /\ r2=0 /\ r3=1 /\ r4=0
)";

}  // namespace

TEST_CASE("parses the IRIW source") {
  const LitmusTest test = parseLitmus(kIriwSource);
  const auto& c11 = std::get<C11Test>(test);
  CHECK(c11.name == "IRIW-acq-acq");
  REQUIRE(c11.threads.size() == 4);
  CHECK(c11.init.size() == 2);
  CHECK(c11.threads[0].size() == 1);
  CHECK(c11.threads[2].size() == 2);
  CHECK(c11.threads[2][0].order == MemoryOrder::Acquire);
  CHECK(c11.threads[2][1].order == MemoryOrder::SeqCst);
  CHECK(c11.threads[2][0].dest == "r1");
  CHECK(c11.outcome.expectForbidden);
  REQUIRE(c11.outcome.terms.size() == 4);
  CHECK(c11.outcome.terms[0].kind == OutcomeTerm::Kind::Register);
  CHECK(c11.outcome.terms[0].name == "r1");
  CHECK(c11.outcome.terms[0].value == 1);
}

TEST_CASE("parses the RWC source") {
  const auto& entry = corpusEntry("RWC-acq");
  const auto& c11 = std::get<C11Test>(entry.test);
  std::size_t ops = 0;
  for (const auto& thread : c11.threads) ops += thread.size();
  CHECK(ops == 5);
  CHECK(c11.threads.size() == 3);
}

TEST_CASE("empty thread list is rejected") {
  const char* src = "c11 test empty\ninit x=0\nforbidden x=0\n";
  CHECK_THROWS_WITH_AS(parseLitmus(src), doctest::Contains("no threads"),
                       ParseError);
}

TEST_CASE("named parse errors") {
  SUBCASE("duplicate register") {
    const char* src =
        "c11 test dup\ninit x=0\n"
        "thread 0 { r1 = load(x, relaxed); r1 = load(x, relaxed); }\n"
        "allowed r1=0\n";
    CHECK_THROWS_WITH_AS(parseLitmus(src),
                         doctest::Contains("duplicate register"), ParseError);
  }
  SUBCASE("store value collision with another store") {
    const char* src =
        "c11 test coll\ninit x=0\n"
        "thread 0 { store(x, 1, relaxed); store(x, 1, relaxed); }\n"
        "allowed x=1\n";
    CHECK_THROWS_WITH_AS(parseLitmus(src),
                         doctest::Contains("store value collision"),
                         ParseError);
  }
  SUBCASE("store value collision with the initializer") {
    const char* src =
        "c11 test coll\ninit x=7\nthread 0 { store(x, 7, relaxed); }\n"
        "allowed x=7\n";
    CHECK_THROWS_AS(parseLitmus(src), ParseError);
  }
  SUBCASE("stores to different locations may share a value") {
    const char* src =
        "c11 test ok\ninit x=0 y=0\n"
        "thread 0 { store(x, 1, relaxed); store(y, 1, relaxed); }\n"
        "allowed x=1\n";
    CHECK_NOTHROW(parseLitmus(src));
  }
  SUBCASE("outcome referencing unknown register") {
    const char* src =
        "c11 test unk\ninit x=0\nthread 0 { store(x, 1, relaxed); }\n"
        "forbidden r9=1\n";
    CHECK_THROWS_WITH_AS(parseLitmus(src), doctest::Contains("unknown"),
                         ParseError);
  }
  SUBCASE("uninitialized location") {
    const char* src =
        "c11 test uninit\ninit x=0\nthread 0 { store(z, 1, relaxed); }\n"
        "allowed x=0\n";
    CHECK_THROWS_WITH_AS(parseLitmus(src), doctest::Contains("not initialized"),
                         ParseError);
  }
  SUBCASE("release load") {
    const char* src =
        "c11 test rel\ninit x=0\nthread 0 { r1 = load(x, release); }\n"
        "allowed r1=0\n";
    CHECK_THROWS_WITH_AS(parseLitmus(src),
                         doctest::Contains("loads cannot be release"),
                         ParseError);
  }
  SUBCASE("location named like a register") {
    const char* src =
        "c11 test regloc\ninit r1=0\nthread 0 { store(r1, 1, relaxed); }\n"
        "allowed r1=1\n";
    CHECK_THROWS_WITH_AS(parseLitmus(src), doctest::Contains("reserved"),
                         ParseError);
  }
  SUBCASE("ctrlisync without a preceding load") {
    const char* src =
        "isa test ctrl arch power\ninit x=0\n"
        "thread 0 { ctrlisync; st x = 1; }\n"
        "allowed x=1\n";
    CHECK_THROWS_WITH_AS(parseLitmus(src),
                         doctest::Contains("must immediately follow a load"),
                         ParseError);
  }
  SUBCASE("errors carry positions") {
    try {
      parseLitmus("c11 test p\ninit x=0\nthread 0 { oops }\nallowed x=0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
      CHECK(e.col > 0);
    }
  }
}

TEST_CASE("render starts with the header and round-trips") {
  const auto& entry = corpusEntry("IRIW-acq-acq");
  const std::string text = renderLitmus(entry.test);
  CHECK(text.rfind("c11 test IRIW-acq-acq", 0) == 0);
  CHECK(parseLitmus(text) == entry.test);
}

TEST_CASE("ISA fences render on their own line") {
  const auto& entry = corpusEntry("IRIW-acq-acq-trailing-sync-power");
  const std::string text = renderLitmus(entry.test);
  CHECK(text.find("\n  sync;\n") != std::string::npos);
  CHECK(text.find("\n  lwsync;\n") != std::string::npos);
}

TEST_CASE("round-trip identity over the whole corpus") {
  for (const CorpusEntry& entry : corpus()) {
    CAPTURE(entry.file);
    CHECK(parseLitmus(renderLitmus(entry.test)) == entry.test);
    // Reparsing the original text is also stable.
    CHECK(parseLitmus(entry.text) == entry.test);
  }
}

TEST_CASE("comments and memory outcome terms") {
  const char* src =
      "# header comment\n"
      "c11 test memterm\ninit x=0\n"
      "thread 0 { store(x, 1, relaxed); }  # trailing comment\n"
      "allowed x=1\n";
  const auto test = parseLitmus(src);
  const auto& c11 = std::get<C11Test>(test);
  REQUIRE(c11.outcome.terms.size() == 1);
  CHECK(c11.outcome.terms[0].kind == OutcomeTerm::Kind::Memory);
}
