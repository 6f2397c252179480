#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ufgdepth/closure.hpp"
#include "ufgdepth/sample.hpp"
#include "ufgdepth/ufg_family.hpp"

namespace ufgdepth {

namespace detail {

inline void require_family_matches(const PosetSample& sample, const UfgFamily& family) {
  if (family.source_unique_count != sample.unique_count() ||
      family.source_n_total != sample.n_total())
    throw FamilySampleMismatch();
}

}  // namespace detail

/// Depth of q under the sample's ufg family: the normalized total weight of
/// the family sets whose closure contains q. Zero everywhere when the family
/// is empty.
inline Rational ufg_depth(const PosetSample& sample, const UfgFamily& family, const Poset& q) {
  require_same_universe(sample.universe(), q.universe());
  detail::require_family_matches(sample, family);
  if (!family.normalizer) return Rational(0);
  Rational total = 0;
  std::vector<Poset> members;
  for (std::size_t s = 0; s < family.sets.size(); ++s) {
    members.clear();
    for (std::size_t k : family.sets[s]) members.push_back(sample.unique_posets()[k]);
    if (contains(bounds(members), q)) total += family.weights[s];
  }
  return *family.normalizer * total;
}

/// Same quantity, evaluated by materializing every closure in full and
/// testing membership by enumeration. Shares none of the witness-search or
/// interval-containment code, so it serves as an independent cross-check.
inline Rational brute_force_depth(const PosetSample& sample, const Poset& q) {
  require_same_universe(sample.universe(), q.universe());
  const UfgFamily family = brute_force_ufg(sample);
  if (!family.normalizer) return Rational(0);
  Rational total = 0;
  std::vector<Poset> members;
  for (std::size_t s = 0; s < family.sets.size(); ++s) {
    members.clear();
    for (std::size_t k : family.sets[s]) members.push_back(sample.unique_posets()[k]);
    const std::vector<Poset> closure = materialize(bounds(members));
    if (std::find(closure.begin(), closure.end(), q) != closure.end())
      total += family.weights[s];
  }
  return *family.normalizer * total;
}

struct FunctionDepthRow {
  std::string function;
  std::size_t unique_index;  // into the sample's unique posets
  Rational depth;
  std::size_t rank;  // dense rank over depth values, 1 = deepest
};

struct DepthDispersion {
  Rational min;
  Rational max;
  Rational range;
};

struct DepthReport {
  std::vector<Rational> unique_depths;  // aligned with sample.unique_posets()
  std::vector<FunctionDepthRow> per_function;
  std::vector<std::vector<std::string>> duplicate_groups;  // functions sharing one poset
  DepthDispersion dispersion;
  std::size_t family_size = 0;
  bool truncated = false;
  std::optional<Rational> normalizer;
};

/// Depths of every observed poset, attributed back to test functions.
/// Functions are listed alphabetically; ranks are dense with 1 for the
/// deepest. Dispersion summarizes the spread over unique posets.
inline DepthReport depth_report(const PosetSample& sample, const UfgFamily& family) {
  detail::require_family_matches(sample, family);
  DepthReport report;
  report.family_size = family.sets.size();
  report.truncated = family.truncated;
  report.normalizer = family.normalizer;

  report.unique_depths.reserve(sample.unique_count());
  for (std::size_t k = 0; k < sample.unique_count(); ++k)
    report.unique_depths.push_back(ufg_depth(sample, family, sample.unique_posets()[k]));

  std::vector<Rational> distinct(report.unique_depths);
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const auto rank_of = [&](const Rational& v) {
    return static_cast<std::size_t>(
               std::lower_bound(distinct.begin(), distinct.end(), v, std::greater<>()) -
               distinct.begin()) +
           1;
  };

  for (std::size_t k = 0; k < sample.unique_count(); ++k) {
    for (const std::string& fn : sample.provenance(k))
      report.per_function.push_back(
          {fn, k, report.unique_depths[k], rank_of(report.unique_depths[k])});
    if (sample.provenance(k).size() >= 2) report.duplicate_groups.push_back(sample.provenance(k));
  }
  std::sort(report.per_function.begin(), report.per_function.end(),
            [](const FunctionDepthRow& a, const FunctionDepthRow& b) {
              return a.function < b.function;
            });

  report.dispersion.min = *std::min_element(report.unique_depths.begin(),
                                            report.unique_depths.end());
  report.dispersion.max = *std::max_element(report.unique_depths.begin(),
                                            report.unique_depths.end());
  report.dispersion.range = report.dispersion.max - report.dispersion.min;
  return report;
}

}  // namespace ufgdepth
