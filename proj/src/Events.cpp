#include "mapcheck/Events.hpp"

#include <stdexcept>

namespace mapcheck {

std::string eventLabel(EventId id) {
  if (id >= 0 && id < 26) return std::string(1, static_cast<char>('a' + id));
  return "e" + std::to_string(id);
}

std::vector<EventId> EventGraph::reads() const {
  std::vector<EventId> out;
  for (const Event& e : events)
    if (e.isRead()) out.push_back(e.id);
  return out;
}

std::vector<EventId> EventGraph::writes() const {
  std::vector<EventId> out;
  for (const Event& e : events)
    if (e.isWrite()) out.push_back(e.id);
  return out;
}

std::vector<EventId> EventGraph::writesTo(const std::string& loc) const {
  std::vector<EventId> out;
  for (const Event& e : events)
    if (e.isWrite() && e.loc == loc) out.push_back(e.id);
  return out;
}

std::vector<std::string> EventGraph::locations() const {
  std::vector<std::string> out;
  for (EventId id : initWrites) out.push_back(events[id].loc);
  return out;
}

EventId EventGraph::initWriteFor(const std::string& loc) const {
  for (EventId id : initWrites)
    if (events[id].loc == loc) return id;
  throw std::out_of_range("no init write for location '" + loc + "'");
}

namespace {

void addInitEvents(EventGraph& graph, const InitList& init) {
  int index = 0;
  for (const auto& [loc, value] : init) {
    Event e;
    e.id = static_cast<EventId>(graph.events.size());
    e.thread = kInitThread;
    e.index = index++;
    e.kind = EventKind::Write;
    e.loc = loc;
    e.value = value;
    e.order = MemoryOrder::Relaxed;
    e.isInit = true;
    graph.initWrites.push_back(e.id);
    graph.events.push_back(std::move(e));
  }
}

// sb = union over threads of the (transitively closed) total order on that
// thread's events.
void closeSb(EventGraph& graph, const std::vector<std::vector<EventId>>& rows) {
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      for (std::size_t j = i + 1; j < row.size(); ++j)
        graph.sb.insert(row[i], row[j]);
}

}  // namespace

EventGraph buildEvents(const C11Test& test) {
  EventGraph graph;
  graph.name = test.name;
  graph.level = TestLevel::C11;
  graph.outcome = test.outcome;
  addInitEvents(graph, test.init);

  std::vector<std::vector<EventId>> rows;
  for (std::size_t t = 0; t < test.threads.size(); ++t) {
    rows.emplace_back();
    int index = 0;
    for (const C11Op& op : test.threads[t]) {
      Event e;
      e.id = static_cast<EventId>(graph.events.size());
      e.thread = static_cast<int>(t);
      e.index = index++;
      e.kind = op.kind == C11Op::Kind::Load ? EventKind::Read
                                            : EventKind::Write;
      e.loc = op.loc;
      e.value = op.kind == C11Op::Kind::Store ? op.value : 0;
      e.order = op.order;
      e.dest = op.dest;
      rows.back().push_back(e.id);
      graph.events.push_back(std::move(e));
    }
  }
  closeSb(graph, rows);
  return graph;
}

EventGraph buildEvents(const IsaTest& test) {
  EventGraph graph;
  graph.name = test.name;
  graph.level = TestLevel::Isa;
  graph.arch = test.arch;
  graph.outcome = test.outcome;
  addInitEvents(graph, test.init);

  std::vector<std::vector<EventId>> rows;
  for (std::size_t t = 0; t < test.threads.size(); ++t) {
    rows.emplace_back();
    int index = 0;
    for (const IsaOp& op : test.threads[t]) {
      Event e;
      e.id = static_cast<EventId>(graph.events.size());
      e.thread = static_cast<int>(t);
      e.index = index++;
      switch (op.kind) {
        case IsaOp::Kind::Load:
          e.kind = EventKind::Read;
          e.loc = op.loc;
          e.dest = op.dest;
          break;
        case IsaOp::Kind::Store:
          e.kind = EventKind::Write;
          e.loc = op.loc;
          e.value = op.value;
          break;
        case IsaOp::Kind::Fence:
          e.kind = EventKind::Fence;
          e.fence = op.fence;
          break;
      }
      rows.back().push_back(e.id);
      graph.events.push_back(std::move(e));
    }
  }
  closeSb(graph, rows);
  return graph;
}

EventGraph buildEvents(const LitmusTest& test) {
  return std::visit([](const auto& t) { return buildEvents(t); }, test);
}

}  // namespace mapcheck
