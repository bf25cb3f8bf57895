#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mapcheck/Corpus.hpp"
#include "mapcheck/Dot.hpp"
#include "mapcheck/Parser.hpp"
#include "mapcheck/Report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBug = 1;
constexpr int kExitUsage = 2;

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

const mapcheck::Outcome& outcomeOf(const mapcheck::LitmusTest& test) {
  return std::visit(
      [](const auto& t) -> const mapcheck::Outcome& { return t.outcome; },
      test);
}

int runCheck(const std::string& file, bool json) {
  const mapcheck::LitmusTest test = mapcheck::parseLitmus(readFile(file));
  const mapcheck::Verdict verdict = mapcheck::checkTest(test);
  const bool expectedForbidden = outcomeOf(test).expectForbidden;
  const bool match = verdict.allowed != expectedForbidden;
  if (json) {
    std::cout << mapcheck::dumpReport(
        mapcheck::checkReport(file, test, verdict));
  } else {
    std::cout << mapcheck::testName(test) << ": "
              << (verdict.allowed ? "allowed" : "forbidden") << " (expected "
              << (expectedForbidden ? "forbidden" : "allowed") << ") "
              << (match ? "ok" : "MISMATCH") << '\n'
              << "  reason: " << verdict.reason << '\n';
  }
  return match ? kExitOk : kExitBug;
}

int runCompile(const std::string& file, const std::string& mappingName,
               const std::string& outPath, bool json) {
  const mapcheck::LitmusTest test = mapcheck::parseLitmus(readFile(file));
  const auto* c11 = std::get_if<mapcheck::C11Test>(&test);
  if (c11 == nullptr)
    throw std::runtime_error("compile needs a c11-level test");
  const mapcheck::MappingTable table = mapcheck::resolveMapping(mappingName);
  const mapcheck::IsaTest compiled = mapcheck::compile(*c11, table);
  const std::string text = mapcheck::renderLitmus(compiled);
  if (json) {
    nlohmann::json report;
    report["schema"] = 1;
    report["command"] = "compile";
    report["file"] = file;
    report["mapping"] = table.name;
    report["test"] = compiled.name;
    report["output"] = text;
    std::cout << mapcheck::dumpReport(report);
  } else if (!outPath.empty()) {
    writeFile(outPath, text);
  } else {
    std::cout << text;
  }
  return kExitOk;
}

int runCompare(const std::string& file, const std::string& mappingName,
               const std::string& dotPath, bool json) {
  const mapcheck::LitmusTest test = mapcheck::parseLitmus(readFile(file));
  const auto* c11 = std::get_if<mapcheck::C11Test>(&test);
  if (c11 == nullptr)
    throw std::runtime_error("compare needs a c11-level test");
  const mapcheck::MappingTable table = mapcheck::resolveMapping(mappingName);
  const mapcheck::CompareResult res = mapcheck::compare(*c11, table);

  if (!dotPath.empty() && res.sourceExec) {
    std::vector<mapcheck::LabeledRelation> rels = {
        {"sb", res.sourceExec->g().sb},
        {"rf", res.sourceExec->rf},
        {"sw", res.sourceSw},
    };
    if (res.forcedCycle) {
      rels.push_back({"sc_hb", res.forcedCycle->scHb});
      rels.push_back({"sc_mo", res.forcedCycle->scMo});
      rels.push_back({"sc_fr", res.forcedCycle->scFr});
    } else {
      rels.push_back({"hb", res.sourceHb});
    }
    writeFile(dotPath, mapcheck::emitDot(*res.sourceExec, rels));
  }

  if (json) {
    std::cout << mapcheck::dumpReport(mapcheck::compareReport(file, res));
  } else {
    std::cout << c11->name << " under " << table.name << ":\n"
              << "  c11: " << (res.source.allowed ? "allowed" : "forbidden")
              << '\n'
              << "  hw:  " << (res.target.allowed ? "allowed" : "forbidden")
              << '\n';
    if (res.bug) {
      std::cout << "  MAPPING BUG: outcome forbidden at the source level but "
                   "allowed after compilation\n";
    } else {
      std::cout << "  ok\n";
    }
  }
  return res.bug ? kExitBug : kExitOk;
}

int runSweep(const std::string& file, const std::vector<std::string>& varySpecs,
             const std::vector<std::string>& orderNames, int jobs, bool json) {
  const mapcheck::LitmusTest test = mapcheck::parseLitmus(readFile(file));
  const auto* c11 = std::get_if<mapcheck::C11Test>(&test);
  if (c11 == nullptr) throw std::runtime_error("sweep needs a c11-level test");

  std::vector<mapcheck::SweepPosition> positions;
  for (const std::string& spec : varySpecs) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("bad --vary '" + spec + "' (want thread:op)");
    mapcheck::SweepPosition p;
    try {
      p.thread = std::stoi(spec.substr(0, colon));
      p.op = std::stoi(spec.substr(colon + 1));
    } catch (...) {
      throw std::runtime_error("bad --vary '" + spec + "' (want thread:op)");
    }
    positions.push_back(p);
  }

  std::vector<mapcheck::MemoryOrder> orders;
  for (const std::string& name : orderNames) {
    if (name == "relaxed") {
      orders.push_back(mapcheck::MemoryOrder::Relaxed);
    } else if (name == "acquire") {
      orders.push_back(mapcheck::MemoryOrder::Acquire);
    } else if (name == "release") {
      orders.push_back(mapcheck::MemoryOrder::Release);
    } else if (name == "seq_cst") {
      orders.push_back(mapcheck::MemoryOrder::SeqCst);
    } else {
      throw std::runtime_error("unknown memory order '" + name + "'");
    }
  }

  const auto variants = mapcheck::sweep(*c11, positions, orders, jobs);
  std::size_t bugs = 0;
  for (const auto& v : variants)
    for (const auto& mo : v.results)
      if (mo.bug) ++bugs;

  if (json) {
    std::cout << mapcheck::dumpReport(
        mapcheck::sweepReport(file, positions, orders, variants));
  } else {
    for (const auto& v : variants) {
      std::cout << v.name << ":\n";
      for (const auto& mo : v.results) {
        std::cout << "  " << mo.mapping << ": c11="
                  << (mo.sourceForbidden ? "forbidden" : "allowed")
                  << " hw=" << (mo.targetAllowed ? "allowed" : "forbidden")
                  << (mo.bug ? "  BUG" : "") << '\n';
      }
    }
    std::cout << bugs << " bug(s) found\n";
  }
  return bugs > 0 ? kExitBug : kExitOk;
}

int runCorpus(bool json) {
  const auto checks = mapcheck::runCorpus();
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  if (json) {
    std::cout << mapcheck::dumpReport(mapcheck::corpusReport(checks));
  } else {
    for (const auto& c : checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " ("
                << (c.level == mapcheck::TestLevel::C11 ? "c11" : "isa")
                << ") expected="
                << (c.expectedForbidden ? "forbidden" : "allowed")
                << " actual=" << (c.actualForbidden ? "forbidden" : "allowed")
                << '\n';
    }
    std::cout << (all ? "all expectations met" : "EXPECTATION MISMATCH")
              << '\n';
  }
  return all ? kExitOk : kExitBug;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mapcheck: C11-atomics-to-Power/ARMv7 compiler mapping checker"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit a JSON report on stdout");

  std::string checkFile;
  auto* check = app.add_subcommand(
      "check", "decide a litmus test against its level's model");
  check->add_option("file", checkFile, "litmus file")->required();

  std::string compileFile, compileMapping, compileOut;
  auto* comp = app.add_subcommand(
      "compile", "translate a c11 test to an ISA test under a mapping");
  comp->add_option("file", compileFile, "litmus file")->required();
  comp->add_option("--mapping", compileMapping, "mapping name or file")
      ->required();
  comp->add_option("-o,--output", compileOut, "write the ISA test here");

  std::string compareFile, compareMapping, compareDot;
  auto* cmp = app.add_subcommand(
      "compare", "check source-vs-compiled verdicts and report mapping bugs");
  cmp->add_option("file", compareFile, "litmus file")->required();
  cmp->add_option("--mapping", compareMapping, "mapping name or file")
      ->required();
  cmp->add_option("--dot", compareDot, "write the witness graph as DOT");

  std::string sweepFile;
  std::vector<std::string> varySpecs, orderNames;
  int jobs = 0;
  auto* swp = app.add_subcommand(
      "sweep", "enumerate memory-order variants and compare each one");
  swp->add_option("file", sweepFile, "litmus file")->required();
  swp->add_option("--vary", varySpecs, "positions to vary, as thread:op")
      ->required()
      ->delimiter(',');
  swp->add_option("--orders", orderNames, "orders to sweep over")
      ->required()
      ->delimiter(',');
  swp->add_option("--jobs", jobs, "worker count (default: MAPCHECK_JOBS or 1)");

  auto* corp =
      app.add_subcommand("corpus", "run every bundled test's expectation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return runCheck(checkFile, json);
    if (comp->parsed())
      return runCompile(compileFile, compileMapping, compileOut, json);
    if (cmp->parsed())
      return runCompare(compareFile, compareMapping, compareDot, json);
    if (swp->parsed())
      return runSweep(sweepFile, varySpecs, orderNames, jobs, json);
    if (corp->parsed()) return runCorpus(json);
  } catch (const std::exception& e) {
    std::cerr << "mapcheck: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
