#include "mapcheck/Litmus.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mapcheck {

std::string_view toString(MemoryOrder order) {
  switch (order) {
    case MemoryOrder::Relaxed: return "relaxed";
    case MemoryOrder::Acquire: return "acquire";
    case MemoryOrder::Release: return "release";
    case MemoryOrder::SeqCst: return "seq_cst";
  }
  return "?";
}

std::string_view toString(FenceKind fence) {
  switch (fence) {
    case FenceKind::Sync: return "sync";
    case FenceKind::Lwsync: return "lwsync";
    case FenceKind::DmbIsh: return "dmbish";
    case FenceKind::CtrlIsync: return "ctrlisync";
    case FenceKind::CtrlIsb: return "ctrlisb";
  }
  return "?";
}

std::string_view toString(Arch arch) {
  return arch == Arch::Power ? "power" : "armv7";
}

bool isAcquireLike(MemoryOrder order) {
  return order == MemoryOrder::Acquire || order == MemoryOrder::SeqCst;
}

bool isReleaseLike(MemoryOrder order) {
  return order == MemoryOrder::Release || order == MemoryOrder::SeqCst;
}

int initValue(const InitList& init, const std::string& loc) {
  for (const auto& [l, v] : init)
    if (l == loc) return v;
  throw ValidationError("location '" + loc + "' not initialized");
}

bool hasInit(const InitList& init, const std::string& loc) {
  return std::any_of(init.begin(), init.end(),
                     [&](const auto& p) { return p.first == loc; });
}

namespace {

void checkInitList(const InitList& init) {
  std::set<std::string> seen;
  for (const auto& [loc, value] : init) {
    (void)value;
    if (!seen.insert(loc).second)
      throw ValidationError("duplicate init for location '" + loc + "'");
  }
}

// Distinct-value rule: per location, every store value differs from every
// other store to that location and from its initializer. This is what makes
// rf recoverable from final register values.
void checkDistinctValues(const InitList& init,
                         const std::vector<std::pair<std::string, int>>& stores) {
  std::map<std::string, std::set<int>> seen;
  for (const auto& [loc, value] : init) seen[loc].insert(value);
  for (const auto& [loc, value] : stores) {
    if (!seen[loc].insert(value).second)
      throw ValidationError("store value collision: value " +
                            std::to_string(value) + " written twice to '" +
                            loc + "'");
  }
}

struct Names {
  std::set<std::string> registers;
  std::set<std::string> locations;
};

void resolveOutcome(Outcome& outcome, const Names& names,
                    const InitList& init) {
  if (outcome.terms.empty())
    throw ValidationError("outcome has no equality terms");
  for (auto& term : outcome.terms) {
    const bool isReg = names.registers.count(term.name) != 0;
    const bool isLoc = names.locations.count(term.name) != 0;
    if (isReg && isLoc)
      throw ValidationError("outcome name '" + term.name +
                            "' is both a register and a location");
    if (isReg) {
      term.kind = OutcomeTerm::Kind::Register;
    } else if (isLoc) {
      term.kind = OutcomeTerm::Kind::Memory;
      if (!hasInit(init, term.name))
        throw ValidationError("outcome location '" + term.name +
                              "' not initialized");
    } else {
      throw ValidationError("outcome references unknown register or location '" +
                            term.name + "'");
    }
  }
}

void checkThreads(std::size_t count) {
  if (count == 0) throw ValidationError("no threads");
}

}  // namespace

void validate(C11Test& test) {
  checkThreads(test.threads.size());
  checkInitList(test.init);

  Names names;
  std::vector<std::pair<std::string, int>> stores;
  for (const auto& thread : test.threads) {
    for (const auto& op : thread) {
      if (!hasInit(test.init, op.loc))
        throw ValidationError("location '" + op.loc + "' not initialized");
      names.locations.insert(op.loc);
      if (op.kind == C11Op::Kind::Load) {
        if (op.order == MemoryOrder::Release)
          throw ValidationError("loads cannot be release");
        if (!names.registers.insert(op.dest).second)
          throw ValidationError("duplicate register '" + op.dest + "'");
      } else {
        if (op.order == MemoryOrder::Acquire)
          throw ValidationError("stores cannot be acquire");
        stores.emplace_back(op.loc, op.value);
      }
    }
  }
  checkDistinctValues(test.init, stores);
  resolveOutcome(test.outcome, names, test.init);
}

void validate(IsaTest& test) {
  checkThreads(test.threads.size());
  checkInitList(test.init);

  Names names;
  std::vector<std::pair<std::string, int>> stores;
  for (const auto& thread : test.threads) {
    for (std::size_t i = 0; i < thread.size(); ++i) {
      const IsaOp& op = thread[i];
      if (op.kind == IsaOp::Kind::Fence) {
        const bool ctrl = op.fence == FenceKind::CtrlIsync ||
                          op.fence == FenceKind::CtrlIsb;
        // ctrlisync/ctrlisb encodes a branch on the preceding load.
        if (ctrl && (i == 0 || thread[i - 1].kind != IsaOp::Kind::Load))
          throw ValidationError(std::string(toString(op.fence)) +
                                " must immediately follow a load");
        continue;
      }
      if (!hasInit(test.init, op.loc))
        throw ValidationError("location '" + op.loc + "' not initialized");
      names.locations.insert(op.loc);
      if (op.kind == IsaOp::Kind::Load) {
        if (!names.registers.insert(op.dest).second)
          throw ValidationError("duplicate register '" + op.dest + "'");
      } else {
        stores.emplace_back(op.loc, op.value);
      }
    }
  }
  checkDistinctValues(test.init, stores);
  resolveOutcome(test.outcome, names, test.init);
}

}  // namespace mapcheck
