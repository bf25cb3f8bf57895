#ifndef MAPCHECK_RELATION_HPP
#define MAPCHECK_RELATION_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace mapcheck {

using EventId = int;

/// A finite binary relation over event ids.
///
/// This is the carrier for every model relation in the tool (sb, rf, mo, fr,
/// sw, hb, ppo, fences, prop, ...). Pairs are kept in a sorted set, so
/// iteration order -- and therefore every report derived from a Relation --
/// is deterministic.
class Relation {
 public:
  using Pair = std::pair<EventId, EventId>;

  Relation() = default;
  Relation(std::initializer_list<Pair> pairs) : pairs_(pairs) {}

  void insert(EventId a, EventId b) { pairs_.insert({a, b}); }
  bool contains(EventId a, EventId b) const {
    return pairs_.count({a, b}) != 0;
  }
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }
  const std::set<Pair>& pairs() const { return pairs_; }

  bool operator==(const Relation& other) const = default;

  Relation& operator|=(const Relation& other);
  Relation& operator&=(const Relation& other);
  friend Relation operator|(Relation lhs, const Relation& rhs) {
    lhs |= rhs;
    return lhs;
  }
  friend Relation operator&(Relation lhs, const Relation& rhs) {
    lhs &= rhs;
    return lhs;
  }

  Relation inverse() const;

  /// Transitive closure. Monotone and idempotent: r.plus().plus() == r.plus().
  Relation plus() const;

  bool irreflexive() const;

  /// acyclic(r) <=> irreflexive(r.plus()).
  bool acyclic() const { return plus().irreflexive(); }

  /// A cycle witness as a node sequence v0 -> v1 -> ... -> v0, or nullopt if
  /// the relation is acyclic. Deterministic: the search visits ids in order.
  std::optional<std::vector<EventId>> findCycle() const;

  /// Pairs whose endpoints both satisfy the predicate.
  template <typename Pred>
  Relation restrictedTo(Pred pred) const {
    Relation out;
    for (const auto& [a, b] : pairs_) {
      if (pred(a) && pred(b)) out.insert(a, b);
    }
    return out;
  }

  /// Pairs satisfying a binary predicate.
  template <typename Pred>
  Relation filter(Pred pred) const {
    Relation out;
    for (const auto& [a, b] : pairs_) {
      if (pred(a, b)) out.insert(a, b);
    }
    return out;
  }

  /// All ids appearing on either side of a pair.
  std::set<EventId> support() const;

 private:
  std::set<Pair> pairs_;
};

/// Composition a;b = { (x,z) : (x,y) in a, (y,z) in b }.
Relation seq(const Relation& a, const Relation& b);

/// a;b* = a | a;b+. Lets callers write starred compositions without
/// materializing an identity relation over some universe.
Relation seqStar(const Relation& a, const Relation& b);

/// a*;b = b | a+;b.
Relation starSeq(const Relation& a, const Relation& b);

}  // namespace mapcheck

#endif  // MAPCHECK_RELATION_HPP
