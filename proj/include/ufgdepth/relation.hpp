#pragma once

#include <bit>
#include <compare>
#include <initializer_list>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ufgdepth/universe.hpp"

namespace ufgdepth {

// Pair convention used everywhere in this library, including all file formats:
// the pair (below, above) states that `above` outperforms `below`. In a Hasse
// drawing `above` sits over `below`.
struct Pair {
  std::size_t below;
  std::size_t above;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

using Row = std::uint64_t;

inline Row row_mask(std::size_t d) { return d >= 64 ? ~Row{0} : ((Row{1} << d) - 1); }

/// An arbitrary relation on a Universe, stored as its strict part: bit `j` of
/// row `i` set means the pair (i, j) is present. Reflexive pairs are implicit
/// and never stored, so set algebra on strict parts matches set algebra on the
/// full reflexive relations. Values are immutable once built.
class Relation {
 public:
  explicit Relation(UniversePtr universe)
      : universe_(std::move(universe)), rows_(universe_->size(), Row{0}) {}

  static Relation from_pairs(UniversePtr universe, std::span<const Pair> pairs) {
    Relation r(std::move(universe));
    const std::size_t d = r.size();
    for (const Pair& p : pairs) {
      if (p.below >= d) throw IndexOutOfRange(p.below, d);
      if (p.above >= d) throw IndexOutOfRange(p.above, d);
      if (p.below == p.above) continue;  // diagonal is implicit
      r.rows_[p.below] |= Row{1} << p.above;
    }
    return r;
  }

  static Relation from_pairs(UniversePtr universe, std::initializer_list<Pair> pairs) {
    return from_pairs(std::move(universe), std::span<const Pair>(pairs.begin(), pairs.size()));
  }

  static Relation from_rows(UniversePtr universe, std::vector<Row> rows) {
    Relation r(std::move(universe));
    const std::size_t d = r.size();
    rows.resize(d, Row{0});
    for (std::size_t i = 0; i < d; ++i) rows[i] &= row_mask(d) & ~(Row{1} << i);
    r.rows_ = std::move(rows);
    return r;
  }

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return rows_.size(); }
  Row row(std::size_t i) const { return rows_[i]; }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  bool contains(std::size_t below, std::size_t above) const {
    return (rows_[below] >> above) & Row{1};
  }

  std::size_t pair_count() const {
    std::size_t n = 0;
    for (Row r : rows_) n += static_cast<std::size_t>(std::popcount(r));
    return n;
  }

  bool empty() const {
    for (Row r : rows_)
      if (r) return false;
    return true;
  }

  std::vector<Pair> pairs() const {
    std::vector<Pair> out;
    out.reserve(pair_count());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Row r = rows_[i];
      while (r) {
        const std::size_t j = static_cast<std::size_t>(std::countr_zero(r));
        out.push_back({i, j});
        r &= r - 1;
      }
    }
    return out;  // sorted by (below, above)
  }

  /// True iff this relation's pairs are a subset of `other`'s.
  bool subset_of(const Relation& other) const {
    require_same_universe(universe_, other.universe_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (rows_[i] & ~other.rows_[i]) return false;
    return true;
  }

  bool is_antisymmetric() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Row r = rows_[i];
      while (r) {
        const std::size_t j = static_cast<std::size_t>(std::countr_zero(r));
        if (j > i && contains(j, i)) return false;
        r &= r - 1;
      }
    }
    return true;
  }

  bool is_transitive() const {
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      const Row above_j = rows_[j];
      if (!above_j) continue;
      for (std::size_t i = 0; i < rows_.size(); ++i)
        if (contains(i, j) && (above_j & ~rows_[i] & ~(Row{1} << i))) return false;
    }
    return true;
  }

  friend bool operator==(const Relation& a, const Relation& b) {
    return same_universe(a.universe_, b.universe_) && a.rows_ == b.rows_;
  }

 private:
  UniversePtr universe_;
  std::vector<Row> rows_;
};

/// Smallest transitive relation containing `r` (strict part; chains that close
/// a cycle contribute only their off-diagonal pairs). Idempotent.
inline Relation transitive_closure(const Relation& r) {
  std::vector<Row> rows = r.rows();
  const std::size_t d = rows.size();
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      if ((rows[i] >> k) & Row{1}) rows[i] |= rows[k];
  for (std::size_t i = 0; i < d; ++i) rows[i] &= ~(Row{1} << i);
  return Relation::from_rows(r.universe(), std::move(rows));
}

/// A partial order: antisymmetric and transitive strict part, reflexivity
/// implicit. Construct through from_pairs/checked, which prove the axioms.
class Poset {
 public:
  static Poset from_pairs(UniversePtr universe, std::span<const Pair> pairs) {
    return checked(Relation::from_pairs(std::move(universe), pairs));
  }

  static Poset checked(Relation r) {
    validate(r);
    return Poset(std::move(r));
  }

  /// Caller has already proven antisymmetry and transitivity.
  static Poset unchecked(Relation r) { return Poset(std::move(r)); }

  static void validate(const Relation& r) {
    const std::size_t d = r.size();
    for (std::size_t i = 0; i < d; ++i) {
      Row row = r.row(i);
      while (row) {
        const std::size_t j = static_cast<std::size_t>(std::countr_zero(row));
        row &= row - 1;
        if (r.contains(j, i)) throw AntisymmetryViolation(i, j);
        Row beyond = r.row(j) & ~r.row(i) & ~(Row{1} << i);
        if (beyond) throw TransitivityViolation(i, j, static_cast<std::size_t>(std::countr_zero(beyond)));
      }
    }
  }

  const Relation& strict() const noexcept { return rel_; }
  const UniversePtr& universe() const noexcept { return rel_.universe(); }
  std::size_t size() const noexcept { return rel_.size(); }
  bool contains(std::size_t below, std::size_t above) const { return rel_.contains(below, above); }
  std::size_t pair_count() const { return rel_.pair_count(); }
  std::vector<Pair> pairs() const { return rel_.pairs(); }

  friend bool operator==(const Poset& a, const Poset& b) { return a.rel_ == b.rel_; }

  /// Total order on posets of one universe (row-lexicographic); used for
  /// canonical set representations.
  friend std::strong_ordering operator<=>(const Poset& a, const Poset& b) {
    return a.rel_.rows() <=> b.rel_.rows();
  }

 private:
  explicit Poset(Relation r) : rel_(std::move(r)) {}
  Relation rel_;
};

inline Poset poset_from_pairs(UniversePtr universe, std::span<const Pair> pairs) {
  return Poset::from_pairs(std::move(universe), pairs);
}

inline Poset poset_from_pairs(UniversePtr universe, std::initializer_list<Pair> pairs) {
  return Poset::from_pairs(std::move(universe), std::span<const Pair>(pairs.begin(), pairs.size()));
}

/// Hasse edges: the unique minimal pair set whose transitive closure is the
/// strict part of `p`. A pair survives iff no item sits strictly between its
/// endpoints.
inline std::vector<Pair> transitive_reduction(const Poset& p) {
  const std::size_t d = p.size();
  std::vector<Row> above(d, Row{0});  // column view: above[j] = items strictly below j
  for (std::size_t i = 0; i < d; ++i) {
    Row r = p.strict().row(i);
    while (r) {
      const std::size_t j = static_cast<std::size_t>(std::countr_zero(r));
      above[j] |= Row{1} << i;
      r &= r - 1;
    }
  }
  std::vector<Pair> edges;
  for (std::size_t i = 0; i < d; ++i) {
    Row r = p.strict().row(i);
    while (r) {
      const std::size_t j = static_cast<std::size_t>(std::countr_zero(r));
      r &= r - 1;
      if ((p.strict().row(i) & above[j]) == 0) edges.push_back({i, j});
    }
  }
  return edges;
}

/// Pairwise intersection of strict parts. Intersection preserves all poset
/// axioms, so the result is always a valid Poset.
inline Poset intersect_all(std::span<const Poset> posets) {
  if (posets.empty()) throw EmptyInput("intersect_all");
  const UniversePtr& u = posets.front().universe();
  std::vector<Row> rows = posets.front().strict().rows();
  for (std::size_t n = 1; n < posets.size(); ++n) {
    require_same_universe(u, posets[n].universe());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] &= posets[n].strict().row(i);
  }
  return Poset::unchecked(Relation::from_rows(u, std::move(rows)));
}

/// Pairwise union of strict parts. Antisymmetry and transitivity may fail, so
/// the result is a plain Relation.
inline Relation union_all(std::span<const Poset> posets) {
  if (posets.empty()) throw EmptyInput("union_all");
  const UniversePtr& u = posets.front().universe();
  std::vector<Row> rows = posets.front().strict().rows();
  for (std::size_t n = 1; n < posets.size(); ++n) {
    require_same_universe(u, posets[n].universe());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] |= posets[n].strict().row(i);
  }
  return Relation::from_rows(u, std::move(rows));
}

/// True iff every strict pair of `p` also holds in `q`.
inline bool is_extension(const Poset& p, const Poset& q) { return p.strict().subset_of(q.strict()); }

}  // namespace ufgdepth
