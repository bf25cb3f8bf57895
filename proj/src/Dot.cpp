#include "mapcheck/Dot.hpp"

#include <map>
#include <sstream>

namespace mapcheck {

namespace {

std::string orderAbbrev(MemoryOrder order) {
  switch (order) {
    case MemoryOrder::Relaxed: return "rlx";
    case MemoryOrder::Acquire: return "acq";
    case MemoryOrder::Release: return "rel";
    case MemoryOrder::SeqCst: return "sc";
  }
  return "?";
}

struct EdgeStyle {
  const char* color;
  const char* style;
  int penwidth;
};

EdgeStyle styleFor(const std::string& label) {
  static const std::map<std::string, EdgeStyle> styles = {
      {"sb", {"gray40", "solid", 1}},      {"po", {"gray40", "solid", 1}},
      {"rf", {"forestgreen", "solid", 1}}, {"rfe", {"forestgreen", "solid", 1}},
      {"sw", {"blue", "solid", 1}},        {"hb", {"gray70", "dashed", 1}},
      {"mo", {"sienna", "solid", 1}},      {"co", {"sienna", "solid", 1}},
      {"fr", {"red", "solid", 1}},         {"fre", {"red", "solid", 1}},
      {"sc_hb", {"purple", "bold", 2}},    {"sc_fr", {"darkred", "bold", 2}},
      {"sc_mo", {"sienna", "bold", 2}},    {"ppo", {"orange", "solid", 1}},
      {"lwfence", {"navy", "solid", 1}},   {"ffence", {"navy", "bold", 2}},
      {"prop", {"purple", "dashed", 1}},
  };
  auto it = styles.find(label);
  if (it != styles.end()) return it->second;
  return {"black", "solid", 1};
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string nodeLabel(const Execution& exec, const Event& e) {
  std::ostringstream out;
  out << eventLabel(e.id) << ": ";
  switch (e.kind) {
    case EventKind::Read:
      out << "R " << e.loc << '=' << exec.valueOf(e.id);
      break;
    case EventKind::Write:
      out << "W " << e.loc << '=' << e.value;
      break;
    case EventKind::Fence:
      out << "F";
      break;
  }
  if (exec.g().level == TestLevel::C11) {
    out << " [" << orderAbbrev(e.order) << ']';
  } else if (e.fence) {
    out << " [" << toString(*e.fence) << ']';
  }
  return out.str();
}

}  // namespace

std::string emitDot(const Execution& exec,
                    const std::vector<LabeledRelation>& relations) {
  const EventGraph& g = exec.g();
  std::ostringstream out;
  out << "digraph \"" << escape(g.name) << "\" {\n";
  out << "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (const Event& e : g.events) {
    out << "  n" << e.id << " [label=\"" << escape(nodeLabel(exec, e))
        << "\"];\n";
  }
  for (const LabeledRelation& lr : relations) {
    const EdgeStyle style = styleFor(lr.label);
    for (const auto& [a, b] : lr.rel.pairs()) {
      out << "  n" << a << " -> n" << b << " [label=\"" << escape(lr.label)
          << "\", color=" << style.color << ", style=" << style.style
          << ", penwidth=" << style.penwidth << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace mapcheck
