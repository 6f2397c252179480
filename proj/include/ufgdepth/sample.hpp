#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ufgdepth/rational.hpp"
#include "ufgdepth/relation.hpp"

namespace ufgdepth {

/// Observed posets grouped into distinct values with multiplicities and the
/// test functions that produced them. Carries the empirical measure: poset k
/// has weight multiplicity(k) / n_total().
class PosetSample {
 public:
  /// One observation per test function, in suite order. Grouping keeps the
  /// first-appearance order, so results are deterministic for a fixed input.
  static PosetSample from_observations(std::vector<Poset> observed, std::vector<std::string> function_names) {
    if (observed.empty()) throw EmptyInput("PosetSample::from_observations");
    if (observed.size() != function_names.size())
      throw LengthMismatch(observed.size(), function_names.size());
    PosetSample s;
    s.universe_ = observed.front().universe();
    std::map<std::vector<Row>, std::size_t> index_by_rows;
    for (std::size_t n = 0; n < observed.size(); ++n) {
      require_same_universe(s.universe_, observed[n].universe());
      auto [it, inserted] = index_by_rows.try_emplace(observed[n].strict().rows(), s.unique_.size());
      if (inserted) {
        s.unique_.push_back(std::move(observed[n]));
        s.multiplicities_.push_back(0);
        s.provenance_.emplace_back();
      }
      ++s.multiplicities_[it->second];
      s.provenance_[it->second].push_back(std::move(function_names[n]));
      ++s.n_total_;
    }
    return s;
  }

  const UniversePtr& universe() const noexcept { return universe_; }
  const std::vector<Poset>& unique_posets() const noexcept { return unique_; }
  std::size_t unique_count() const noexcept { return unique_.size(); }
  std::size_t multiplicity(std::size_t k) const { return multiplicities_.at(k); }
  const std::vector<std::string>& provenance(std::size_t k) const { return provenance_.at(k); }
  std::size_t n_total() const noexcept { return n_total_; }

  /// Empirical weight of unique poset k.
  Rational weight(std::size_t k) const {
    return Rational(BigInt(multiplicity(k)), BigInt(n_total_));
  }

 private:
  PosetSample() = default;
  UniversePtr universe_;
  std::vector<Poset> unique_;
  std::vector<std::size_t> multiplicities_;
  std::vector<std::vector<std::string>> provenance_;
  std::size_t n_total_ = 0;
};

}  // namespace ufgdepth
