#include "mapcheck/Report.hpp"

#include "mapcheck/Parser.hpp"

namespace mapcheck {

namespace {

using nlohmann::json;

json relationJson(const Relation& rel) {
  json out = json::array();
  for (const auto& [a, b] : rel.pairs())
    out.push_back({eventLabel(a), eventLabel(b)});
  return out;
}

json witnessJson(const Execution& exec) {
  json out;
  out["rf"] = relationJson(exec.rf);
  out["mo"] = relationJson(exec.mo);
  json regs = json::object();
  for (const auto& [name, value] : exec.registers) regs[name] = value;
  out["registers"] = regs;
  return out;
}

json forcedJson(const ForcedScEdges& forced) {
  json out;
  out["sc_hb"] = relationJson(forced.scHb);
  out["sc_mo"] = relationJson(forced.scMo);
  out["sc_fr"] = relationJson(forced.scFr);
  if (forced.cycle) {
    json cyc = json::array();
    for (EventId id : *forced.cycle) cyc.push_back(eventLabel(id));
    out["cycle"] = cyc;
  } else {
    out["cycle"] = nullptr;
  }
  return out;
}

json gapJson(const BattyGapReport& gap) {
  json out;
  out["scEventsPresent"] = gap.scEventsPresent;
  out["linearizable"] = gap.linearizable;
  out["scOrderExists"] = gap.scOrderExists;
  out["gap"] = gap.gap;
  return out;
}

const char* levelName(TestLevel level) {
  return level == TestLevel::C11 ? "c11" : "isa";
}

}  // namespace

json toJson(const Verdict& verdict) {
  json out;
  out["model"] = verdict.model == Verdict::Model::C11 ? "c11" : "hw";
  if (verdict.arch) out["arch"] = std::string(toString(*verdict.arch));
  out["allowed"] = verdict.allowed;
  out["reason"] = verdict.reason;
  out["executions"] = verdict.executionCount;
  out["matching"] = verdict.matchingCount;
  out["witness"] = verdict.witness ? witnessJson(*verdict.witness) : json();
  return out;
}

json toJson(const BugReport& bug) {
  json out;
  out["test"] = bug.testName;
  out["mapping"] = bug.mappingName;
  out["compiled"] = renderLitmus(bug.compiled);
  out["source"] = toJson(bug.source);
  out["target"] = toJson(bug.target);
  out["forcedCycle"] = bug.forcedCycle ? forcedJson(*bug.forcedCycle) : json();
  out["loophole"] = bug.gapReport ? gapJson(*bug.gapReport) : json();
  return out;
}

json checkReport(const std::string& file, const LitmusTest& test,
                 const Verdict& verdict) {
  const Outcome& outcome = std::visit(
      [](const auto& t) -> const Outcome& { return t.outcome; }, test);
  json out;
  out["schema"] = 1;
  out["command"] = "check";
  out["file"] = file;
  out["test"] = testName(test);
  out["level"] =
      levelName(std::holds_alternative<C11Test>(test) ? TestLevel::C11
                                                      : TestLevel::Isa);
  out["expected"] = outcome.expectForbidden ? "forbidden" : "allowed";
  out["verdict"] = verdict.allowed ? "allowed" : "forbidden";
  out["match"] = verdict.allowed != outcome.expectForbidden;
  out["detail"] = toJson(verdict);
  return out;
}

json compareReport(const std::string& file, const CompareResult& res) {
  json out;
  out["schema"] = 1;
  out["command"] = "compare";
  out["file"] = file;
  out["test"] = res.compiled.name;
  out["source"] = toJson(res.source);
  out["target"] = toJson(res.target);
  out["bug"] = res.bug ? toJson(*res.bug) : json();
  return out;
}

json sweepReport(const std::string& file,
                 const std::vector<SweepPosition>& positions,
                 const std::vector<MemoryOrder>& orders,
                 const std::vector<SweepVariant>& variants) {
  json out;
  out["schema"] = 1;
  out["command"] = "sweep";
  out["file"] = file;
  json pos = json::array();
  for (const SweepPosition& p : positions)
    pos.push_back(std::to_string(p.thread) + ":" + std::to_string(p.op));
  out["positions"] = pos;
  json ords = json::array();
  for (MemoryOrder o : orders) ords.push_back(std::string(toString(o)));
  out["orders"] = ords;

  json list = json::array();
  std::size_t bugs = 0;
  for (const SweepVariant& v : variants) {
    json var;
    var["name"] = v.name;
    json assignment = json::array();
    for (MemoryOrder o : v.assignment)
      assignment.push_back(std::string(toString(o)));
    var["assignment"] = assignment;
    json results = json::array();
    for (const MappingOutcome& mo : v.results) {
      json r;
      r["mapping"] = mo.mapping;
      r["sourceForbidden"] = mo.sourceForbidden;
      r["targetAllowed"] = mo.targetAllowed;
      r["bug"] = mo.bug;
      if (mo.bug) ++bugs;
      results.push_back(r);
    }
    var["results"] = results;
    list.push_back(var);
  }
  out["variants"] = list;
  out["bugCount"] = bugs;
  return out;
}

json corpusReport(const std::vector<CorpusCheck>& checks) {
  json out;
  out["schema"] = 1;
  out["command"] = "corpus";
  json list = json::array();
  bool all = true;
  for (const CorpusCheck& c : checks) {
    json entry;
    entry["file"] = c.file;
    entry["test"] = c.name;
    entry["level"] = levelName(c.level);
    entry["expected"] = c.expectedForbidden ? "forbidden" : "allowed";
    entry["actual"] = c.actualForbidden ? "forbidden" : "allowed";
    entry["pass"] = c.pass;
    all = all && c.pass;
    list.push_back(entry);
  }
  out["results"] = list;
  out["pass"] = all;
  return out;
}

std::string dumpReport(const nlohmann::json& report) {
  return report.dump(2) + "\n";
}

}  // namespace mapcheck
