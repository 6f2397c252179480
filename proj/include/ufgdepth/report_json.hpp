#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "ufgdepth/analysis.hpp"
#include "ufgdepth/rational.hpp"
#include "ufgdepth/version.hpp"

namespace ufgdepth {

namespace detail {

inline nlohmann::json rational_json(const Rational& r) {
  return {{"exact", rational_string(r)}, {"decimal", decimal_string(r)}};
}

}  // namespace detail

/// Deterministic report document: keys sorted, exact rationals alongside
/// 17-significant-digit decimals, two-space indentation, trailing newline.
/// Byte-identical across runs for the same table and flags.
inline std::string write_report_json(const AnalysisResult& result) {
  nlohmann::json doc;
  doc["version"] = kVersion;
  doc["tie_policy"] = result.policy == TiePolicy::error_on_tie ? "error" : "drop";

  doc["dropped_functions"] = nlohmann::json::array();
  for (const TieOutcome& t : result.suite.dropped) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [a, b] : t.tied_pairs) pairs.push_back({a, b});
    doc["dropped_functions"].push_back({{"function", t.function}, {"tied_pairs", pairs}});
  }

  const DepthReport& report = result.report;
  doc["duplicate_groups"] = report.duplicate_groups;
  const auto group_of = [&](const std::string& fn) -> nlohmann::json {
    for (std::size_t g = 0; g < report.duplicate_groups.size(); ++g)
      for (const std::string& member : report.duplicate_groups[g])
        if (member == fn) return g;
    return nullptr;
  };

  doc["functions"] = nlohmann::json::array();
  for (const FunctionDepthRow& row : report.per_function)
    doc["functions"].push_back({{"function", row.function},
                                {"depth", detail::rational_json(row.depth)},
                                {"rank", row.rank},
                                {"duplicate_group", group_of(row.function)}});

  doc["family_size"] = report.family_size;
  doc["truncated"] = report.truncated;
  doc["normalizer"] =
      report.normalizer ? detail::rational_json(*report.normalizer) : nlohmann::json(nullptr);
  doc["dispersion"] = {{"min", detail::rational_json(report.dispersion.min)},
                       {"max", detail::rational_json(report.dispersion.max)},
                       {"range", detail::rational_json(report.dispersion.range)}};
  return doc.dump(2) + "\n";
}

}  // namespace ufgdepth
