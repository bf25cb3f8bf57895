#include "mapcheck/Mapping.hpp"

#include <fstream>
#include <sstream>

namespace mapcheck {

namespace {

using Kind = C11Op::Kind;
using MO = MemoryOrder;

std::vector<MapToken> rule(std::initializer_list<MapToken> toks) {
  return {toks};
}

MapToken acc() { return MapToken::access(); }
MapToken sync() { return MapToken::fenceOf(FenceKind::Sync); }
MapToken lwsync() { return MapToken::fenceOf(FenceKind::Lwsync); }
MapToken dmbish() { return MapToken::fenceOf(FenceKind::DmbIsh); }
MapToken ctrlisync() { return MapToken::fenceOf(FenceKind::CtrlIsync); }
MapToken ctrlisb() { return MapToken::fenceOf(FenceKind::CtrlIsb); }

MappingTable leadingSyncPower() {
  MappingTable t;
  t.name = "leading-sync-power";
  t.arch = Arch::Power;
  t.rules[{Kind::Load, MO::Relaxed}] = rule({acc()});
  t.rules[{Kind::Load, MO::Acquire}] = rule({acc(), ctrlisync()});
  t.rules[{Kind::Load, MO::SeqCst}] = rule({sync(), acc(), ctrlisync()});
  t.rules[{Kind::Store, MO::Relaxed}] = rule({acc()});
  t.rules[{Kind::Store, MO::Release}] = rule({lwsync(), acc()});
  t.rules[{Kind::Store, MO::SeqCst}] = rule({sync(), acc()});
  return t;
}

MappingTable leadingSyncArmv7() {
  MappingTable t;
  t.name = "leading-sync-armv7";
  t.arch = Arch::Armv7;
  t.rules[{Kind::Load, MO::Relaxed}] = rule({acc()});
  t.rules[{Kind::Load, MO::Acquire}] = rule({acc(), ctrlisb()});
  t.rules[{Kind::Load, MO::SeqCst}] = rule({dmbish(), acc(), ctrlisb()});
  t.rules[{Kind::Store, MO::Relaxed}] = rule({acc()});
  t.rules[{Kind::Store, MO::Release}] = rule({dmbish(), acc()});
  t.rules[{Kind::Store, MO::SeqCst}] = rule({dmbish(), acc()});
  return t;
}

MappingTable trailingSyncPower() {
  MappingTable t;
  t.name = "trailing-sync-power";
  t.arch = Arch::Power;
  t.rules[{Kind::Load, MO::Relaxed}] = rule({acc()});
  t.rules[{Kind::Load, MO::Acquire}] = rule({acc(), ctrlisync()});
  t.rules[{Kind::Load, MO::SeqCst}] = rule({acc(), sync()});
  t.rules[{Kind::Store, MO::Relaxed}] = rule({acc()});
  t.rules[{Kind::Store, MO::Release}] = rule({lwsync(), acc()});
  t.rules[{Kind::Store, MO::SeqCst}] = rule({lwsync(), acc(), sync()});
  return t;
}

MappingTable trailingSyncArmv7() {
  MappingTable t;
  t.name = "trailing-sync-armv7";
  t.arch = Arch::Armv7;
  t.rules[{Kind::Load, MO::Relaxed}] = rule({acc()});
  t.rules[{Kind::Load, MO::Acquire}] = rule({acc(), ctrlisb()});
  t.rules[{Kind::Load, MO::SeqCst}] = rule({acc(), dmbish()});
  t.rules[{Kind::Store, MO::Relaxed}] = rule({acc()});
  t.rules[{Kind::Store, MO::Release}] = rule({dmbish(), acc()});
  t.rules[{Kind::Store, MO::SeqCst}] = rule({dmbish(), acc(), dmbish()});
  return t;
}

MappingTable gccArmv7() {
  MappingTable t = trailingSyncArmv7();
  t.name = "gcc-armv7";
  // GCC/Clang lower ARMv7 acquire loads to ld; dmb ish, which is what saves
  // their otherwise trailing-sync mapping from the counterexamples.
  t.rules[{Kind::Load, MO::Acquire}] = rule({acc(), dmbish()});
  return t;
}

bool fenceFitsArch(FenceKind f, Arch arch) {
  switch (f) {
    case FenceKind::Sync:
    case FenceKind::Lwsync:
    case FenceKind::CtrlIsync:
      return arch == Arch::Power;
    case FenceKind::DmbIsh:
    case FenceKind::CtrlIsb:
      return arch == Arch::Armv7;
  }
  return false;
}

void checkTable(const MappingTable& t) {
  for (const auto& [key, toks] : t.rules) {
    int accesses = 0;
    for (const MapToken& tok : toks) {
      if (tok.kind == MapToken::Kind::Access) {
        ++accesses;
      } else if (!fenceFitsArch(tok.fence, t.arch)) {
        throw MappingError("mapping '" + t.name + "': fence " +
                           std::string(toString(tok.fence)) +
                           " does not belong to arch " +
                           std::string(toString(t.arch)));
      }
    }
    if (accesses != 1)
      throw MappingError("mapping '" + t.name +
                         "': each rule needs exactly one ld/st");
    (void)key;
  }
}

}  // namespace

const std::vector<MappingTable>& mappingCatalog() {
  static const std::vector<MappingTable> catalog = {
      leadingSyncPower(), leadingSyncArmv7(), trailingSyncPower(),
      trailingSyncArmv7(), gccArmv7()};
  return catalog;
}

const MappingTable* findMapping(std::string_view name) {
  for (const MappingTable& t : mappingCatalog())
    if (t.name == name) return &t;
  return nullptr;
}

MappingTable resolveMapping(const std::string& nameOrFile) {
  if (const MappingTable* t = findMapping(nameOrFile)) return *t;
  std::ifstream in(nameOrFile);
  if (!in) {
    std::string names;
    for (const MappingTable& t : mappingCatalog()) {
      if (!names.empty()) names += ", ";
      names += t.name;
    }
    throw MappingError("unknown mapping '" + nameOrFile +
                       "' (built-ins: " + names + "; or pass a mapping file)");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseMappingTable(buf.str());
}

MappingTable parseMappingTable(const std::string& text) {
  MappingTable table;
  bool sawHeader = false;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    const auto bad = [&](const std::string& msg) {
      throw MappingError("mapping line " + std::to_string(lineNo) + ": " + msg);
    };
    if (word == "mapping") {
      std::string archWord;
      if (!(ls >> table.name >> word >> archWord) || word != "arch")
        bad("expected 'mapping <name> arch <power|armv7>'");
      if (archWord == "power") {
        table.arch = Arch::Power;
      } else if (archWord == "armv7") {
        table.arch = Arch::Armv7;
      } else {
        bad("unknown arch '" + archWord + "'");
      }
      sawHeader = true;
      continue;
    }
    if (word != "map") bad("expected 'mapping' or 'map'");
    if (!sawHeader) bad("'map' before 'mapping' header");

    std::string kindWord, orderWord, arrow;
    if (!(ls >> kindWord >> orderWord >> arrow) || arrow != "->")
      bad("expected 'map <load|store> <order> -> <ops>'");
    MappingKey key;
    if (kindWord == "load") {
      key.first = Kind::Load;
    } else if (kindWord == "store") {
      key.first = Kind::Store;
    } else {
      bad("unknown op kind '" + kindWord + "'");
    }
    if (orderWord == "relaxed") {
      key.second = MO::Relaxed;
    } else if (orderWord == "acquire") {
      key.second = MO::Acquire;
    } else if (orderWord == "release") {
      key.second = MO::Release;
    } else if (orderWord == "seq_cst") {
      key.second = MO::SeqCst;
    } else {
      bad("unknown memory order '" + orderWord + "'");
    }

    std::string rest;
    std::getline(ls, rest);
    std::vector<MapToken> toks;
    std::istringstream ops(rest);
    std::string tok;
    while (std::getline(ops, tok, ';')) {
      std::istringstream ts(tok);
      std::string w;
      if (!(ts >> w)) continue;
      if (w == "ld" || w == "st") {
        if ((w == "ld") != (key.first == Kind::Load))
          bad("access token '" + w + "' does not match op kind");
        toks.push_back(MapToken::access());
      } else if (w == "sync") {
        toks.push_back(MapToken::fenceOf(FenceKind::Sync));
      } else if (w == "lwsync") {
        toks.push_back(MapToken::fenceOf(FenceKind::Lwsync));
      } else if (w == "dmbish") {
        toks.push_back(MapToken::fenceOf(FenceKind::DmbIsh));
      } else if (w == "ctrlisync") {
        toks.push_back(MapToken::fenceOf(FenceKind::CtrlIsync));
      } else if (w == "ctrlisb") {
        toks.push_back(MapToken::fenceOf(FenceKind::CtrlIsb));
      } else {
        bad("unknown op token '" + w + "'");
      }
      std::string extra;
      if (ts >> extra) bad("unexpected token '" + extra + "'");
    }
    if (!table.rules.emplace(key, std::move(toks)).second)
      bad("duplicate rule for " + kindWord + " " + orderWord);
  }
  if (!sawHeader) throw MappingError("mapping file has no 'mapping' header");
  checkTable(table);
  return table;
}

MappingTable loadMappingFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MappingError("cannot open mapping file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseMappingTable(buf.str());
}

std::string renderMappingTable(const MappingTable& table) {
  std::ostringstream out;
  out << "mapping " << table.name << " arch " << toString(table.arch) << '\n';
  for (const auto& [key, toks] : table.rules) {
    out << "map " << (key.first == Kind::Load ? "load" : "store") << ' '
        << toString(key.second) << " ->";
    for (std::size_t i = 0; i < toks.size(); ++i) {
      out << (i == 0 ? " " : "; ");
      if (toks[i].kind == MapToken::Kind::Access) {
        out << (key.first == Kind::Load ? "ld" : "st");
      } else {
        out << toString(toks[i].fence);
      }
    }
    out << '\n';
  }
  return out.str();
}

IsaTest compile(const C11Test& test, const MappingTable& table) {
  checkTable(table);
  IsaTest out;
  out.name = test.name + "-" + table.name;
  out.arch = table.arch;
  out.init = test.init;
  out.outcome = test.outcome;

  for (const auto& thread : test.threads) {
    out.threads.emplace_back();
    auto& ops = out.threads.back();
    for (const C11Op& op : thread) {
      const auto it = table.rules.find({op.kind, op.order});
      if (it == table.rules.end())
        throw MappingError("mapping '" + table.name + "' has no rule for " +
                           (op.kind == Kind::Load ? "load " : "store ") +
                           std::string(toString(op.order)));
      for (const MapToken& tok : it->second) {
        IsaOp isa;
        if (tok.kind == MapToken::Kind::Access) {
          isa.kind = op.kind == Kind::Load ? IsaOp::Kind::Load
                                           : IsaOp::Kind::Store;
          isa.loc = op.loc;
          isa.value = op.value;
          isa.dest = op.dest;
        } else {
          isa.kind = IsaOp::Kind::Fence;
          isa.fence = tok.fence;
        }
        ops.push_back(std::move(isa));
      }
    }
  }
  validate(out);
  return out;
}

}  // namespace mapcheck
