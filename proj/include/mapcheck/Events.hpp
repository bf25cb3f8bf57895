#ifndef MAPCHECK_EVENTS_HPP
#define MAPCHECK_EVENTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mapcheck/Litmus.hpp"
#include "mapcheck/Relation.hpp"

namespace mapcheck {

inline constexpr int kInitThread = -1;

enum class EventKind { Read, Write, Fence };

enum class TestLevel { C11, Isa };

/// One dynamic memory access or fence. Init writes live on a distinguished
/// pseudo-thread, one per initialized location, and carry relaxed order (the
/// counterexample arguments lean on the initial writes being non-SC).
struct Event {
  EventId id = 0;
  int thread = kInitThread;
  int index = 0;  // position within the thread
  EventKind kind = EventKind::Write;
  std::string loc;
  int value = 0;  // writes: value written; reads observe per execution
  MemoryOrder order = MemoryOrder::Relaxed;  // C11 accesses only
  std::optional<FenceKind> fence;            // ISA fences only
  std::string dest;                          // loads only
  bool isInit = false;

  bool isRead() const { return kind == EventKind::Read; }
  bool isWrite() const { return kind == EventKind::Write; }
  bool isFence() const { return kind == EventKind::Fence; }
  bool isSc() const { return order == MemoryOrder::SeqCst; }
};

/// 'a', 'b', ... for the first 26 ids, matching the usual litmus-diagram
/// lettering; "e27" style beyond that.
std::string eventLabel(EventId id);

/// The static event structure of a test: init writes first (ids dense and
/// deterministic), then each thread's events in program order. sb is stored
/// transitively closed, never crosses threads, and does not involve init
/// events (init visibility is a separate relation in the C11 model).
struct EventGraph {
  std::string name;
  TestLevel level = TestLevel::C11;
  std::optional<Arch> arch;
  Outcome outcome;
  std::vector<Event> events;  // events[id].id == id
  Relation sb;
  std::vector<EventId> initWrites;

  const Event& at(EventId id) const { return events[id]; }
  std::vector<EventId> reads() const;
  std::vector<EventId> writes() const;          // init included
  std::vector<EventId> writesTo(const std::string& loc) const;
  std::vector<std::string> locations() const;   // init order
  EventId initWriteFor(const std::string& loc) const;
};

EventGraph buildEvents(const C11Test& test);
EventGraph buildEvents(const IsaTest& test);
EventGraph buildEvents(const LitmusTest& test);

}  // namespace mapcheck

#endif  // MAPCHECK_EVENTS_HPP
