#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <string>

#include "ufgdepth/closure.hpp"
#include "ufgdepth/depth.hpp"
#include "ufgdepth/rational.hpp"
#include "ufgdepth/sample.hpp"
#include "ufgdepth/ufg_family.hpp"

namespace ufgdepth {

/// Every poset on the universe, by brute force over all strict relations.
/// Ordered pairs (i, j), i != j, are numbered row-major; relations are
/// visited in ascending bitmask order, which fixes the output order. Limited
/// to 5 items (2^20 candidate masks).
inline std::vector<Poset> enumerate_all_posets(const UniversePtr& universe) {
  const std::size_t d = universe->size();
  if (d > 5) throw UniverseTooLarge(d, 5);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) slots.emplace_back(i, j);

  std::vector<Poset> out;
  std::vector<Row> rows(d);
  const std::uint64_t end = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    std::fill(rows.begin(), rows.end(), Row{0});
    for (std::size_t b = 0; b < slots.size(); ++b)
      if ((mask >> b) & 1u) rows[slots[b].first] |= Row{1} << slots[b].second;

    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) {
      for (std::size_t j = i + 1; j < d && ok; ++j)
        if (((rows[i] >> j) & (rows[j] >> i)) & 1u) ok = false;  // antisymmetry
      Row r = rows[i];
      while (r && ok) {
        const std::size_t j = static_cast<std::size_t>(std::countr_zero(r));
        r &= r - 1;
        if (rows[j] & ~rows[i]) ok = false;  // transitivity: above(j) ⊆ above(i)
      }
    }
    if (ok) out.push_back(Poset::checked(Relation::from_rows(universe, rows)));
  }
  return out;
}

struct DepthProfile {
  std::vector<Poset> posets;     // all posets on the universe, enumeration order
  std::vector<Rational> depths;  // brute-force depth of each
};

/// Brute-force depth of every poset on the universe. Family sets' closures
/// are materialized once and membership is tested by lookup, so this stays
/// independent of the interval-containment fast path.
inline DepthProfile depth_profile_over_space(const PosetSample& sample) {
  if (sample.universe()->size() > 4)
    throw UniverseTooLarge(sample.universe()->size(), 4);
  const UfgFamily family = brute_force_ufg(sample);

  std::vector<std::set<Poset>> closures;
  std::vector<Poset> members;
  for (const std::vector<std::size_t>& set : family.sets) {
    members.clear();
    for (std::size_t k : set) members.push_back(sample.unique_posets()[k]);
    const std::vector<Poset> all = materialize(bounds(members));
    closures.emplace_back(all.begin(), all.end());
  }

  DepthProfile profile;
  profile.posets = enumerate_all_posets(sample.universe());
  profile.depths.reserve(profile.posets.size());
  for (const Poset& q : profile.posets) {
    Rational total = 0;
    for (std::size_t s = 0; s < closures.size(); ++s)
      if (closures[s].contains(q)) total += family.weights[s];
    profile.depths.push_back(family.normalizer ? *family.normalizer * total : Rational(0));
  }
  return profile;
}

struct OracleCheckResult {
  bool ok = true;
  std::string detail;  // first mismatch, empty when ok
};

/// Diffs the optimized pipeline against the brute-force definitions: the ufg
/// family set-for-set and weight-for-weight, then the depth of every poset on
/// the universe. Subject to the oracle size caps.
inline OracleCheckResult oracle_check(const PosetSample& sample) {
  const UfgFamily fast = enumerate_ufg(sample);
  const UfgFamily brute = brute_force_ufg(sample);
  if (fast.sets != brute.sets)
    return {false, "ufg families differ: " + std::to_string(fast.sets.size()) + " sets vs " +
                       std::to_string(brute.sets.size())};
  if (fast.weights != brute.weights) return {false, "ufg weights differ"};
  if (fast.normalizer != brute.normalizer) return {false, "normalizers differ"};

  const DepthProfile profile = depth_profile_over_space(sample);
  for (std::size_t k = 0; k < profile.posets.size(); ++k) {
    const Rational d = ufg_depth(sample, fast, profile.posets[k]);
    if (d != profile.depths[k])
      return {false, "depth mismatch at poset " + std::to_string(k) + ": " + rational_string(d) +
                         " vs " + rational_string(profile.depths[k])};
  }
  return {};
}

}  // namespace ufgdepth
