#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "ufgdepth/closure.hpp"
#include "ufgdepth/sample.hpp"

namespace ufgdepth {

/// The union-free generic subsets of a sample's unique posets, each with the
/// product of its members' empirical weights. `normalizer` is the reciprocal
/// of the weight total and is absent when no set qualifies.
struct UfgFamily {
  std::vector<std::vector<std::size_t>> sets;  // size-major, then lexicographic
  std::vector<Rational> weights;
  std::optional<Rational> normalizer;
  bool truncated = false;
  // fingerprint of the originating sample, for downstream consistency checks
  std::size_t source_unique_count = 0;
  std::size_t source_n_total = 0;
};

/// The closure of P strictly exceeds P itself: some poset outside P is
/// sandwiched between the intersection and the union of P.
inline bool is_nontrivial(std::span<const Poset> posets) {
  return exists_witness(bounds(posets), {}, posets).has_value();
}

/// The closure of P is not covered by the closures of P's proper subsets.
/// Only the maximal proper subsets P \ {x} need checking: closures are
/// monotone, so any covering family can be widened to maximal subsets.
inline bool is_union_free(std::span<const Poset> posets) {
  if (posets.size() < 2) return true;  // no nonempty proper subsets to decompose into
  std::vector<SandwichBounds> forbidden;
  forbidden.reserve(posets.size());
  std::vector<Poset> rest(posets.begin() + 1, posets.end());
  for (std::size_t x = 0; x < posets.size(); ++x) {
    forbidden.push_back(bounds(rest));
    if (x + 1 < posets.size()) rest[x] = posets[x];
  }
  return exists_witness(bounds(posets), forbidden, {}).has_value();
}

inline bool is_ufg_set(std::span<const Poset> posets) {
  return is_nontrivial(posets) && is_union_free(posets);
}

namespace detail {

inline Rational subset_weight(const PosetSample& sample, std::span<const std::size_t> indices) {
  BigInt numerator = 1;
  for (std::size_t k : indices) numerator *= BigInt(sample.multiplicity(k));
  return Rational(numerator, boost::multiprecision::pow(BigInt(sample.n_total()),
                                                        static_cast<unsigned>(indices.size())));
}

inline void finalize_family(UfgFamily& family, const PosetSample& sample) {
  family.source_unique_count = sample.unique_count();
  family.source_n_total = sample.n_total();
  if (family.sets.empty()) return;
  Rational total = 0;
  for (const Rational& w : family.weights) total += w;
  family.normalizer = Rational(1) / total;
}

// Size-major, lexicographic-within-size subset walk over {0..n-1}.
template <typename Fn>
void for_each_subset_by_size(std::size_t n, std::size_t min_size, std::size_t max_size, Fn&& fn) {
  for (std::size_t s = min_size; s <= max_size && s <= n; ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t t = 0; t < s; ++t) idx[t] = t;
    while (true) {
      fn(std::span<const std::size_t>(idx));
      std::size_t t = s;
      while (t > 0 && idx[t - 1] == n - s + t - 1) --t;
      if (t == 0) break;
      ++idx[t - 1];
      for (std::size_t v = t; v < s; ++v) idx[v] = idx[v - 1] + 1;
    }
  }
}

}  // namespace detail

/// All union-free generic subsets of the sample's unique posets, smallest
/// first. `max_size` caps the subset size; a cap below the unique-poset count
/// marks the family (and every report built from it) as truncated.
inline UfgFamily enumerate_ufg(const PosetSample& sample,
                               std::optional<std::size_t> max_size = std::nullopt) {
  const std::size_t n = sample.unique_count();
  const std::size_t cap = max_size ? std::min(*max_size, n) : n;
  UfgFamily family;
  family.truncated = max_size && *max_size < n;
  detail::for_each_subset_by_size(n, 2, cap, [&](std::span<const std::size_t> idx) {
    std::vector<Poset> members;
    members.reserve(idx.size());
    for (std::size_t k : idx) members.push_back(sample.unique_posets()[k]);
    if (!is_nontrivial(members) || !is_union_free(members)) return;
    family.sets.emplace_back(idx.begin(), idx.end());
    family.weights.push_back(detail::subset_weight(sample, idx));
  });
  detail::finalize_family(family, sample);
  return family;
}

/// Reference implementation of the same family, feasible only for tiny
/// instances: closures are materialized in full, and the decomposability
/// check quantifies over every proper subset rather than using witnesses.
inline UfgFamily brute_force_ufg(const PosetSample& sample) {
  const std::size_t n = sample.unique_count();
  if (n > 5) throw InstanceTooLarge("brute_force_ufg supports at most 5 unique posets");
  if (sample.universe()->size() > 4)
    throw InstanceTooLarge("brute_force_ufg supports at most 4 items");

  // closures per subset bitmask, materialized once
  std::map<std::uint32_t, std::set<Poset>> closure_of;
  const auto gamma = [&](std::uint32_t mask) -> const std::set<Poset>& {
    auto it = closure_of.find(mask);
    if (it != closure_of.end()) return it->second;
    std::vector<Poset> members;
    for (std::size_t k = 0; k < n; ++k)
      if ((mask >> k) & 1u) members.push_back(sample.unique_posets()[k]);
    auto all = materialize(bounds(members));
    return closure_of.emplace(mask, std::set<Poset>(all.begin(), all.end())).first->second;
  };

  UfgFamily family;
  detail::for_each_subset_by_size(n, 2, n, [&](std::span<const std::size_t> idx) {
    std::uint32_t mask = 0;
    for (std::size_t k : idx) mask |= std::uint32_t{1} << k;
    const std::set<Poset>& full = gamma(mask);
    if (full.size() <= idx.size()) return;  // closure adds nothing
    std::set<Poset> covered;
    for (std::uint32_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
      const std::set<Poset>& part = gamma(sub);
      covered.insert(part.begin(), part.end());
    }
    if (covered.size() >= full.size()) return;  // decomposable: proper subsets cover the closure
    family.sets.emplace_back(idx.begin(), idx.end());
    family.weights.push_back(detail::subset_weight(sample, idx));
  });
  detail::finalize_family(family, sample);
  return family;
}

}  // namespace ufgdepth
