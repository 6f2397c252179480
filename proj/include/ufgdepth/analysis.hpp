#pragma once

#include <optional>
#include <utility>

#include "ufgdepth/depth.hpp"
#include "ufgdepth/dominance.hpp"
#include "ufgdepth/ufg_family.hpp"

namespace ufgdepth {

struct AnalysisResult {
  TiePolicy policy;
  SuiteSample suite;
  UfgFamily family;
  DepthReport report;
};

/// The full pipeline: posets per test function, ufg family, depth report.
inline AnalysisResult analyze_table(const CriteriaTable& table, TiePolicy policy,
                                    std::optional<std::size_t> max_ufg_size = std::nullopt) {
  SuiteSample suite = sample_from_suite(table, policy);
  UfgFamily family = enumerate_ufg(suite.sample, max_ufg_size);
  DepthReport report = depth_report(suite.sample, family);
  return {policy, std::move(suite), std::move(family), std::move(report)};
}

}  // namespace ufgdepth
