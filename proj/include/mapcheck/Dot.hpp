#ifndef MAPCHECK_DOT_HPP
#define MAPCHECK_DOT_HPP

#include <string>
#include <vector>

#include "mapcheck/Execution.hpp"

namespace mapcheck {

struct LabeledRelation {
  std::string label;
  Relation rel;
};

/// Execution-graph rendering in DOT. Nodes are labeled
/// `<letter>: <R|W|F> <loc>=<val> [<order|fence>]` (reads show the value they
/// observe); each relation gets one styled edge class. Node and edge order is
/// deterministic, so output is byte-stable.
std::string emitDot(const Execution& exec,
                    const std::vector<LabeledRelation>& relations);

}  // namespace mapcheck

#endif  // MAPCHECK_DOT_HPP
