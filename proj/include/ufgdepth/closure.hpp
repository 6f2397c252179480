#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <optional>
#include <span>
#include <vector>

#include "ufgdepth/relation.hpp"

namespace ufgdepth {

/// The interval [lower, upper] describing the closure of a poset set P:
/// a poset q belongs to the closure iff lower ⊆ q ⊆ upper (strict parts).
/// lower is the intersection of P and always a poset; upper is the union and
/// in general only a Relation.
struct SandwichBounds {
  Poset lower;
  Relation upper;
};

inline SandwichBounds bounds(std::span<const Poset> posets) {
  if (posets.empty()) throw EmptyInput("bounds");
  return {intersect_all(posets), union_all(posets)};
}

/// Membership test q ∈ closure: lower ⊆ q ⊆ upper.
inline bool contains(const SandwichBounds& b, const Poset& q) {
  require_same_universe(b.lower.universe(), q.universe());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Row qi = q.strict().row(i);
    if (b.lower.strict().row(i) & ~qi) return false;
    if (qi & ~b.upper.row(i)) return false;
  }
  return true;
}

namespace detail {

inline bool is_valid_poset_rows(const std::vector<Row>& rows) {
  const std::size_t d = rows.size();
  for (std::size_t i = 0; i < d; ++i) {
    Row r = rows[i];
    while (r) {
      const std::size_t j = static_cast<std::size_t>(std::countr_zero(r));
      r &= r - 1;
      if ((rows[j] >> i) & Row{1}) return false;                  // antisymmetry
      if (rows[j] & ~rows[i] & ~(Row{1} << i)) return false;      // transitivity
    }
  }
  return true;
}

// Three-valued pair assignment for the witness search: pairs known to be in
// the candidate, pairs known to be out, the rest undecided. Transposes are
// kept so both row and column consequences propagate in word ops.
struct WitnessState {
  std::vector<Row> in, in_t, out, out_t;

  explicit WitnessState(std::size_t d) : in(d, 0), in_t(d, 0), out(d, 0), out_t(d, 0) {}

  bool test(const std::vector<Row>& m, std::size_t i, std::size_t j) const {
    return (m[i] >> j) & Row{1};
  }
};

// Incremental closure maintenance. Every forced consequence is queued, so at
// a full assignment the in-set is transitive and antisymmetric by
// construction.
class WitnessPropagator {
 public:
  explicit WitnessPropagator(std::size_t d) : d_(d) {}

  bool set_in(WitnessState& s, std::size_t i, std::size_t j) {
    if (s.test(s.out, i, j)) return false;
    if (s.test(s.in, i, j)) return true;
    s.in[i] |= Row{1} << j;
    s.in_t[j] |= Row{1} << i;
    queue_.push_back({i, j, true});
    return true;
  }

  bool set_out(WitnessState& s, std::size_t i, std::size_t j) {
    if (s.test(s.in, i, j)) return false;
    if (s.test(s.out, i, j)) return true;
    s.out[i] |= Row{1} << j;
    s.out_t[j] |= Row{1} << i;
    queue_.push_back({i, j, false});
    return true;
  }

  // Runs queued consequences to fixpoint. False means contradiction.
  bool propagate(WitnessState& s) {
    while (!queue_.empty()) {
      const auto [i, j, is_in] = queue_.back();
      queue_.pop_back();
      if (is_in) {
        if (!set_out(s, j, i)) return false;  // antisymmetry
        // transitivity forward/backward: (i,j)(j,k) -> (i,k); (h,i)(i,j) -> (h,j)
        for (Row r = s.in[j]; r;) {
          const std::size_t k = static_cast<std::size_t>(std::countr_zero(r));
          r &= r - 1;
          if (k != i && !set_in(s, i, k)) return false;
        }
        for (Row r = s.in_t[i]; r;) {
          const std::size_t h = static_cast<std::size_t>(std::countr_zero(r));
          r &= r - 1;
          if (h != j && !set_in(s, h, j)) return false;
        }
        // excluded pairs cut chains through (i,j): ¬(i,k) forbids (j,k); ¬(h,j) forbids (h,i)
        for (Row r = s.out[i]; r;) {
          const std::size_t k = static_cast<std::size_t>(std::countr_zero(r));
          r &= r - 1;
          if (k != j && !set_out(s, j, k)) return false;
        }
        for (Row r = s.out_t[j]; r;) {
          const std::size_t h = static_cast<std::size_t>(std::countr_zero(r));
          r &= r - 1;
          if (h != i && !set_out(s, h, i)) return false;
        }
      } else {
        // ¬(i,j): any in-chain i -> k -> j must lose its other leg
        for (Row r = s.in[i]; r;) {
          const std::size_t k = static_cast<std::size_t>(std::countr_zero(r));
          r &= r - 1;
          if (k != j && !set_out(s, k, j)) return false;
        }
        for (Row r = s.in_t[j]; r;) {
          const std::size_t k = static_cast<std::size_t>(std::countr_zero(r));
          r &= r - 1;
          if (k != i && !set_out(s, i, k)) return false;
        }
      }
    }
    return true;
  }

  void clear() { queue_.clear(); }

 private:
  struct Entry {
    std::size_t i, j;
    bool is_in;
  };
  std::size_t d_;
  std::vector<Entry> queue_;
};

}  // namespace detail

/// Exactly all posets q with lower ⊆ q ⊆ upper, in canonical order. The free
/// pairs upper \ lower are enumerated exhaustively (2^k candidates), so the
/// caller must accept the budget or get FreePairBudgetExceeded; there is no
/// silent truncation.
inline std::vector<Poset> materialize(const SandwichBounds& b, std::size_t free_pair_budget = 20) {
  const std::size_t d = b.lower.size();
  std::vector<Pair> free_pairs;
  for (std::size_t i = 0; i < d; ++i) {
    Row r = b.upper.row(i) & ~b.lower.strict().row(i);
    while (r) {
      free_pairs.push_back({i, static_cast<std::size_t>(std::countr_zero(r))});
      r &= r - 1;
    }
  }
  // 2^62 candidates could never finish; treat larger budgets as 62.
  if (free_pairs.size() > std::min<std::size_t>(free_pair_budget, 62))
    throw FreePairBudgetExceeded(free_pairs.size(), free_pair_budget);

  std::vector<Poset> result;
  std::vector<Row> rows(d);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_pairs.size()); ++mask) {
    rows = b.lower.strict().rows();
    for (std::size_t t = 0; t < free_pairs.size(); ++t)
      if ((mask >> t) & 1) rows[free_pairs[t].below] |= Row{1} << free_pairs[t].above;
    if (detail::is_valid_poset_rows(rows))
      result.push_back(Poset::unchecked(Relation::from_rows(b.lower.universe(), rows)));
  }
  std::sort(result.begin(), result.end());
  return result;
}

/// Complete search for a poset q with lower ⊆ q ⊆ upper that lies in none of
/// the `forbidden` intervals and differs from every poset in `excluded`.
/// Deterministic: fixed pair order, include-branch first.
inline std::optional<Poset> exists_witness(const SandwichBounds& b,
                                           std::span<const SandwichBounds> forbidden,
                                           std::span<const Poset> excluded) {
  const std::size_t d = b.lower.size();
  const UniversePtr& u = b.lower.universe();
  require_same_universe(u, b.upper.universe());
  for (const auto& f : forbidden) {
    require_same_universe(u, f.lower.universe());
    require_same_universe(u, f.upper.universe());
  }
  for (const auto& q : excluded) require_same_universe(u, q.universe());

  detail::WitnessState root(d);
  detail::WitnessPropagator prop(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Row decidable = b.upper.row(i);
    const Row fixed_in = b.lower.strict().row(i);
    const Row fixed_out = row_mask(d) & ~decidable & ~(Row{1} << i);
    for (Row r = fixed_in; r;) {
      const std::size_t j = static_cast<std::size_t>(std::countr_zero(r));
      r &= r - 1;
      if (!prop.set_in(root, i, j)) return std::nullopt;
    }
    for (Row r = fixed_out; r;) {
      const std::size_t j = static_cast<std::size_t>(std::countr_zero(r));
      r &= r - 1;
      if (!prop.set_out(root, i, j)) return std::nullopt;
    }
  }
  if (!prop.propagate(root)) return std::nullopt;

  std::vector<Pair> free_pairs;
  for (std::size_t i = 0; i < d; ++i) {
    Row r = b.upper.row(i) & ~b.lower.strict().row(i);
    while (r) {
      free_pairs.push_back({i, static_cast<std::size_t>(std::countr_zero(r))});
      r &= r - 1;
    }
  }

  // A forbidden interval is escaped once the assignment pins a lower pair out
  // or an in pair beyond its upper bound; it is hopeless for this branch when
  // neither has happened and no undecided pair can still do either.
  const auto some_forbidden_inescapable = [&](const detail::WitnessState& s) {
    for (const auto& f : forbidden) {
      bool escaped = false;
      for (std::size_t i = 0; i < d && !escaped; ++i) {
        if (f.lower.strict().row(i) & s.out[i]) escaped = true;
        if (s.in[i] & ~f.upper.row(i)) escaped = true;
      }
      if (escaped) continue;
      bool escapable = false;
      for (std::size_t i = 0; i < d && !escapable; ++i) {
        const Row undecided = b.upper.row(i) & ~s.in[i] & ~s.out[i];
        if (undecided & (f.lower.strict().row(i) | (row_mask(d) & ~f.upper.row(i)))) escapable = true;
      }
      if (!escapable) return true;
    }
    return false;
  };

  std::optional<Poset> found;
  const auto leaf_accepts = [&](const detail::WitnessState& s) {
    for (const auto& q : excluded) {
      bool equal = true;
      for (std::size_t i = 0; i < d && equal; ++i) equal = s.in[i] == q.strict().row(i);
      if (equal) return false;
    }
    assert(detail::is_valid_poset_rows(s.in));
    found = Poset::unchecked(Relation::from_rows(u, s.in));
    return true;
  };

  const auto dfs = [&](auto&& self, const detail::WitnessState& s, std::size_t next) -> bool {
    if (some_forbidden_inescapable(s)) return false;
    std::size_t t = next;
    while (t < free_pairs.size() && (s.test(s.in, free_pairs[t].below, free_pairs[t].above) ||
                                     s.test(s.out, free_pairs[t].below, free_pairs[t].above)))
      ++t;
    if (t == free_pairs.size()) return leaf_accepts(s);
    for (const bool include : {true, false}) {
      detail::WitnessState child = s;
      prop.clear();
      const bool ok = include ? prop.set_in(child, free_pairs[t].below, free_pairs[t].above)
                              : prop.set_out(child, free_pairs[t].below, free_pairs[t].above);
      if (ok && prop.propagate(child) && self(self, child, t + 1)) return true;
    }
    return false;
  };

  dfs(dfs, root, 0);
  return found;
}

}  // namespace ufgdepth
