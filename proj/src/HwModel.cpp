#include "mapcheck/HwModel.hpp"

#include <stdexcept>

namespace mapcheck {

namespace {

bool isFullFence(FenceKind f) {
  return f == FenceKind::Sync || f == FenceKind::DmbIsh;
}

bool isCtrlFence(FenceKind f) {
  return f == FenceKind::CtrlIsync || f == FenceKind::CtrlIsb;
}

// Access pairs (a,b) of one thread with a fence satisfying `match` po-between.
template <typename Match>
Relation acrossFence(const EventGraph& g, Match match) {
  Relation out;
  for (const Event& f : g.events) {
    if (!f.isFence() || !match(*f.fence)) continue;
    for (const Event& a : g.events) {
      if (a.thread != f.thread || a.isFence() || a.index >= f.index) continue;
      for (const Event& b : g.events) {
        if (b.thread != f.thread || b.isFence() || b.index <= f.index)
          continue;
        out.insert(a.id, b.id);
      }
    }
  }
  return out;
}

}  // namespace

HwRelations hwRelations(const Execution& exec) {
  const EventGraph& g = exec.g();
  if (g.level != TestLevel::Isa)
    throw std::invalid_argument("hardware model applied to a C11 execution");

  HwRelations r;
  r.po = g.sb;
  r.poLoc = r.po.filter([&](EventId a, EventId b) {
    return !g.at(a).isFence() && !g.at(b).isFence() &&
           g.at(a).loc == g.at(b).loc;
  });

  r.rf = exec.rf;
  r.rfe = r.rf.filter(
      [&](EventId a, EventId b) { return g.at(a).thread != g.at(b).thread; });
  r.rfi = r.rf.filter(
      [&](EventId a, EventId b) { return g.at(a).thread == g.at(b).thread; });
  r.co = exec.mo;
  r.fr = computeFr(exec);
  r.fre = r.fr.filter(
      [&](EventId a, EventId b) { return g.at(a).thread != g.at(b).thread; });
  r.com = r.rf | r.co | r.fr;

  // ppo from the ctrlisync/ctrlisb pseudo-fence: the dependee load is ordered
  // before every later access on its thread.
  for (const Event& f : g.events) {
    if (!f.isFence() || !isCtrlFence(*f.fence)) continue;
    const Event* load = nullptr;
    for (const Event& e : g.events)
      if (e.thread == f.thread && e.index == f.index - 1) load = &e;
    if (load == nullptr || !load->isRead())
      throw ValidationError(std::string(toString(*f.fence)) +
                            " must immediately follow a load");
    for (const Event& b : g.events) {
      if (b.thread != f.thread || b.isFence() || b.index <= f.index) continue;
      r.ppo.insert(load->id, b.id);
    }
  }

  r.lwfence = acrossFence(g, [](FenceKind f) { return f == FenceKind::Lwsync; })
                  .filter([&](EventId a, EventId b) {
                    return !(g.at(a).isWrite() && g.at(b).isRead());
                  });
  r.ffence = acrossFence(g, isFullFence);
  r.fence = r.lwfence | r.ffence;

  r.hbHw = r.ppo | r.fence | r.rfe;
  r.propBase = seqStar(r.fence | seq(r.rfe, r.fence), r.hbHw);
  const Relation propWW = r.propBase.filter([&](EventId a, EventId b) {
    return g.at(a).isWrite() && g.at(b).isWrite();
  });
  r.prop = propWW |
           starSeq(r.com, starSeq(r.propBase, seqStar(r.ffence, r.hbHw)));
  return r;
}

HwVerdict hwConsistent(const Execution& exec) {
  const HwRelations r = hwRelations(exec);

  const auto cyclic = [](const Relation& rel,
                         HwVerdict& v) {
    auto cycle = rel.findCycle();
    if (!cycle) return false;
    v.consistent = false;
    v.cycle = *cycle;
    return true;
  };

  HwVerdict v;
  if (cyclic(r.poLoc | r.com, v)) {
    v.axiom = "sc-per-location";
    return v;
  }
  if (cyclic(r.hbHw, v)) {
    v.axiom = "no-thin-air";
    return v;
  }
  const Relation obs = seqStar(seq(r.fre, r.prop), r.hbHw);
  for (const auto& [a, b] : obs.pairs()) {
    if (a == b) {
      v.consistent = false;
      v.axiom = "observation";
      v.cycle = {a};
      return v;
    }
  }
  if (cyclic(r.co | r.prop, v)) {
    v.axiom = "propagation";
    return v;
  }
  return v;
}

HwResult hwAllows(const IsaTest& test) {
  HwResult result;
  const std::vector<Execution> execs = enumerateExecutions(test);
  result.executionCount = execs.size();

  for (const Execution& exec : execs) {
    if (!satisfiesOutcome(exec, exec.g().outcome)) continue;
    ++result.matchingCount;
    const HwVerdict v = hwConsistent(exec);
    if (v.consistent) {
      if (!result.allowed) {
        result.allowed = true;
        result.witness = exec;
        result.reason = "consistent-witness";
      }
      result.failureAxioms.emplace_back("consistent");
    } else {
      result.failureAxioms.push_back(v.axiom);
    }
  }
  if (!result.allowed) {
    result.reason = result.matchingCount == 0
                        ? "no execution matches the outcome"
                        : "all " + std::to_string(result.matchingCount) +
                              " matching executions inconsistent";
  }
  return result;
}

}  // namespace mapcheck
