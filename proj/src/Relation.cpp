#include "mapcheck/Relation.hpp"

#include <algorithm>
#include <map>

namespace mapcheck {

Relation& Relation::operator|=(const Relation& other) {
  pairs_.insert(other.pairs_.begin(), other.pairs_.end());
  return *this;
}

Relation& Relation::operator&=(const Relation& other) {
  std::set<Pair> out;
  std::set_intersection(pairs_.begin(), pairs_.end(), other.pairs_.begin(),
                        other.pairs_.end(), std::inserter(out, out.begin()));
  pairs_ = std::move(out);
  return *this;
}

Relation Relation::inverse() const {
  Relation out;
  for (const auto& [a, b] : pairs_) out.insert(b, a);
  return out;
}

Relation Relation::plus() const {
  // Warshall over the support; relations here are tiny (tens of events).
  std::vector<EventId> ids(support().begin(), support().end());
  const std::size_t n = ids.size();
  std::map<EventId, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[ids[i]] = i;

  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : pairs_) m[idx[a]][idx[b]] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (m[k][j]) m[i][j] = true;

  Relation out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j]) out.insert(ids[i], ids[j]);
  return out;
}

bool Relation::irreflexive() const {
  return std::none_of(pairs_.begin(), pairs_.end(),
                      [](const Pair& p) { return p.first == p.second; });
}

std::set<EventId> Relation::support() const {
  std::set<EventId> ids;
  for (const auto& [a, b] : pairs_) {
    ids.insert(a);
    ids.insert(b);
  }
  return ids;
}

namespace {

enum class Mark { Unseen, Active, Done };

bool dfsCycle(EventId v, const std::map<EventId, std::vector<EventId>>& adj,
              std::map<EventId, Mark>& mark, std::vector<EventId>& path,
              std::vector<EventId>& cycle) {
  mark[v] = Mark::Active;
  path.push_back(v);
  auto it = adj.find(v);
  if (it != adj.end()) {
    for (EventId w : it->second) {
      if (mark[w] == Mark::Active) {
        auto start = std::find(path.begin(), path.end(), w);
        cycle.assign(start, path.end());
        return true;
      }
      if (mark[w] == Mark::Unseen && dfsCycle(w, adj, mark, path, cycle))
        return true;
    }
  }
  path.pop_back();
  mark[v] = Mark::Done;
  return false;
}

}  // namespace

std::optional<std::vector<EventId>> Relation::findCycle() const {
  std::map<EventId, std::vector<EventId>> adj;
  std::map<EventId, Mark> mark;
  for (const auto& [a, b] : pairs_) {
    adj[a].push_back(b);
    mark[a] = Mark::Unseen;
    mark[b] = Mark::Unseen;
  }
  std::vector<EventId> path;
  std::vector<EventId> cycle;
  for (auto& [v, m] : mark) {
    if (m == Mark::Unseen && dfsCycle(v, adj, mark, path, cycle))
      return cycle;
  }
  return std::nullopt;
}

Relation seq(const Relation& a, const Relation& b) {
  // Index b by first component.
  std::map<EventId, std::vector<EventId>> succ;
  for (const auto& [x, y] : b.pairs()) succ[x].push_back(y);
  Relation out;
  for (const auto& [x, y] : a.pairs()) {
    auto it = succ.find(y);
    if (it == succ.end()) continue;
    for (EventId z : it->second) out.insert(x, z);
  }
  return out;
}

Relation seqStar(const Relation& a, const Relation& b) {
  return a | seq(a, b.plus());
}

Relation starSeq(const Relation& a, const Relation& b) {
  return b | seq(a.plus(), b);
}

}  // namespace mapcheck
