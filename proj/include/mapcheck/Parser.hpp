#ifndef MAPCHECK_PARSER_HPP
#define MAPCHECK_PARSER_HPP

#include <stdexcept>
#include <string>

#include "mapcheck/Litmus.hpp"

namespace mapcheck {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line;
  int col;
};

/// Parses the litmus text format (see docs/format.md). Throws ParseError with
/// the offending line/column. The returned test is fully validated:
/// parseLitmus(renderLitmus(t)) == t for every valid t.
LitmusTest parseLitmus(const std::string& text);

std::string renderLitmus(const C11Test& test);
std::string renderLitmus(const IsaTest& test);
std::string renderLitmus(const LitmusTest& test);

std::string testName(const LitmusTest& test);

}  // namespace mapcheck

#endif  // MAPCHECK_PARSER_HPP
