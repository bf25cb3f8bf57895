#include "mapcheck/C11Model.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mapcheck {

Relation computeSw(const Execution& exec) {
  Relation sw;
  for (const auto& [w, r] : exec.rf.pairs()) {
    if (isReleaseLike(exec.g().at(w).order) &&
        isAcquireLike(exec.g().at(r).order))
      sw.insert(w, r);
  }
  return sw;
}

Relation initVisibility(const EventGraph& graph) {
  Relation out;
  for (EventId init : graph.initWrites)
    for (const Event& e : graph.events)
      if (!e.isInit) out.insert(init, e.id);
  return out;
}

Relation computeHb(const Execution& exec, const Relation& sw) {
  return (exec.g().sb | sw | initVisibility(exec.g())).plus();
}

CoherenceVerdict checkCoherence(const Execution& exec, const Relation& hb) {
  const Relation eco = (exec.rf | exec.mo | computeFr(exec)).plus();
  for (const auto& [a, b] : hb.pairs()) {
    if (!eco.contains(b, a)) continue;
    CoherenceVerdict v;
    v.ok = false;
    v.first = a;
    v.second = b;
    const bool aw = exec.g().at(a).isWrite();
    const bool bw = exec.g().at(b).isWrite();
    v.shape = aw ? (bw ? "CoWW" : "CoWR") : (bw ? "CoRW" : "CoRR");
    return v;
  }
  return {};
}

namespace {

std::vector<EventId> scEvents(const EventGraph& graph) {
  std::vector<EventId> out;
  for (const Event& e : graph.events)
    if (e.isSc()) out.push_back(e.id);
  return out;
}

}  // namespace

std::optional<std::vector<EventId>> findScOrder(const Execution& exec,
                                                const Relation& hb) {
  const EventGraph& g = exec.g();
  std::vector<EventId> perm = scEvents(g);
  if (perm.empty()) return std::vector<EventId>{};

  const auto isSc = [&](EventId id) { return g.at(id).isSc(); };
  const Relation scHb = hb.restrictedTo(isSc);
  const Relation scMo = exec.mo.restrictedTo(isSc);

  do {
    std::map<EventId, std::size_t> pos;
    for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = i;

    const auto respects = [&](const Relation& rel) {
      for (const auto& [a, b] : rel.pairs())
        if (pos[a] > pos[b]) return false;
      return true;
    };
    if (!respects(scHb) || !respects(scMo)) continue;

    bool ok = true;
    for (EventId r : perm) {
      if (!g.at(r).isRead()) continue;
      // Latest SC write to r's location placed sc-before r.
      EventId latest = -1;
      for (EventId e : perm) {
        if (e == r || !g.at(e).isWrite() || g.at(e).loc != g.at(r).loc)
          continue;
        if (pos[e] < pos[r] && (latest < 0 || pos[e] > pos[latest])) latest = e;
      }
      if (latest < 0) continue;  // no prior SC write: any source admitted
      const EventId src = exec.rfSource(r);
      if (src == latest) continue;
      if (!g.at(src).isSc() && !hb.contains(src, latest)) continue;
      ok = false;
      break;
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

ForcedScEdges forcedScEdges(const Execution& exec, const Relation& hb) {
  const EventGraph& g = exec.g();
  const auto isSc = [&](EventId id) { return g.at(id).isSc(); };

  ForcedScEdges out;
  out.scHb = hb.restrictedTo(isSc);
  out.scMo = exec.mo.restrictedTo(isSc);
  for (const auto& [w, r] : exec.rf.pairs()) {
    if (!isSc(r)) continue;
    for (const auto& [m1, m2] : exec.mo.pairs()) {
      if (m1 != w || !isSc(m2)) continue;
      if (g.at(w).isSc() || hb.contains(w, m2)) out.scFr.insert(r, m2);
    }
  }
  out.cycle = out.all().findCycle();
  return out;
}

BattyGapReport battyLinearizationGap(const Execution& exec,
                                     const Relation& hb) {
  const EventGraph& g = exec.g();
  BattyGapReport rep;
  rep.scEventsPresent = !scEvents(g).empty();
  if (!rep.scEventsPresent) return rep;  // degenerate

  const auto isSc = [&](EventId id) { return g.at(id).isSc(); };
  const Relation erf = exec.rf.filter([&](EventId a, EventId b) {
    return g.at(a).thread != g.at(b).thread;
  });
  const Relation batty =
      (g.sb | exec.mo | computeFr(exec) | erf).restrictedTo(isSc);
  rep.linearizable = batty.acyclic();
  rep.scOrderExists = findScOrder(exec, hb).has_value();
  rep.gap = rep.linearizable && !rep.scOrderExists;
  return rep;
}

C11Witness evaluateC11(const Execution& exec) {
  if (exec.g().level != TestLevel::C11)
    throw std::invalid_argument("C11 model applied to an ISA execution");

  C11Witness w;
  w.exec = exec;
  w.sw = computeSw(exec);
  w.hb = computeHb(exec, w.sw);

  if (!w.hb.irreflexive()) {
    w.reason = "hb-cycle";
    return w;
  }
  const CoherenceVerdict coh = checkCoherence(exec, w.hb);
  if (!coh.ok) {
    w.reason = "coherence:" + coh.shape + "(" + eventLabel(coh.first) + "," +
               eventLabel(coh.second) + ")";
    return w;
  }
  auto order = findScOrder(exec, w.hb);
  if (!order) {
    w.reason = "no-sc-order";
    return w;
  }
  w.consistent = true;
  w.reason = "consistent";
  if (!scEvents(exec.g()).empty()) w.scOrder = std::move(order);
  return w;
}

C11Result c11Allows(const C11Test& test) {
  C11Result result;
  const std::vector<Execution> execs = enumerateExecutions(test);
  result.executionCount = execs.size();

  for (const Execution& exec : execs) {
    if (!satisfiesOutcome(exec, exec.g().outcome)) continue;
    ++result.matchingCount;
    C11Witness w = evaluateC11(exec);
    if (w.consistent) {
      if (!result.allowed) {
        result.allowed = true;
        result.witness = std::move(w);
      }
      continue;
    }
    C11ExecutionFailure failure;
    failure.exec = exec;
    failure.detail = w.reason;
    if (w.reason == "hb-cycle") {
      failure.kind = C11FailureKind::HbCycle;
    } else if (w.reason.rfind("coherence:", 0) == 0) {
      failure.kind = C11FailureKind::Coherence;
    } else {
      failure.kind = C11FailureKind::NoScOrder;
      failure.forced = forcedScEdges(exec, w.hb);
      failure.gapReport = battyLinearizationGap(exec, w.hb);
    }
    result.failures.push_back(std::move(failure));
  }
  return result;
}

}  // namespace mapcheck
