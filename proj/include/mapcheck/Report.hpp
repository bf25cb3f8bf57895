#ifndef MAPCHECK_REPORT_HPP
#define MAPCHECK_REPORT_HPP

#include "json.hpp"
#include "mapcheck/Harness.hpp"

namespace mapcheck {

/// JSON report builders. Every report carries "schema": 1 and is built from
/// sorted containers only, so repeated runs serialize byte-identically
/// (see docs/json.md for the shapes).
nlohmann::json toJson(const Verdict& verdict);
nlohmann::json toJson(const BugReport& bug);

nlohmann::json checkReport(const std::string& file, const LitmusTest& test,
                           const Verdict& verdict);
nlohmann::json compareReport(const std::string& file, const CompareResult& res);
nlohmann::json sweepReport(const std::string& file,
                           const std::vector<SweepPosition>& positions,
                           const std::vector<MemoryOrder>& orders,
                           const std::vector<SweepVariant>& variants);
nlohmann::json corpusReport(const std::vector<CorpusCheck>& checks);

std::string dumpReport(const nlohmann::json& report);  // stable 2-space dump

}  // namespace mapcheck

#endif  // MAPCHECK_REPORT_HPP
