#pragma once

#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "ufgdepth/sample.hpp"

namespace ufgdepth {

enum class Direction { minimize, maximize };

struct CriterionSpec {
  std::string name;
  Direction direction;
  friend bool operator==(const CriterionSpec&, const CriterionSpec&) = default;
};

/// Raw benchmark results: one finite value per (test function, optimizer,
/// criterion) cell. Requires at least two optimizers; one function and one
/// criterion suffice.
class CriteriaTable {
 public:
  static CriteriaTable make(UniversePtr universe, std::vector<std::string> functions,
                            std::vector<CriterionSpec> criteria, std::vector<double> values) {
    if (universe->size() < 2) throw ValidationError("at least two optimizers required");
    if (functions.empty()) throw EmptyInput("CriteriaTable: functions");
    if (criteria.empty()) throw EmptyInput("CriteriaTable: criteria");
    const std::size_t expected = functions.size() * universe->size() * criteria.size();
    if (values.size() != expected) throw LengthMismatch(values.size(), expected);
    for (double v : values)
      if (!std::isfinite(v)) throw NonFiniteValue();
    std::unordered_set<std::string_view> names;
    for (const auto& f : functions)
      if (!names.insert(f).second) throw ValidationError("duplicate test function name: " + f);
    names.clear();
    for (const auto& c : criteria)
      if (!names.insert(c.name).second) throw ValidationError("duplicate criterion name: " + c.name);
    CriteriaTable t;
    t.universe_ = std::move(universe);
    t.functions_ = std::move(functions);
    t.criteria_ = std::move(criteria);
    t.values_ = std::move(values);
    return t;
  }

  const UniversePtr& universe() const noexcept { return universe_; }
  const std::vector<std::string>& functions() const noexcept { return functions_; }
  const std::vector<CriterionSpec>& criteria() const noexcept { return criteria_; }
  std::size_t function_count() const noexcept { return functions_.size(); }
  std::size_t optimizer_count() const noexcept { return universe_->size(); }
  std::size_t criterion_count() const noexcept { return criteria_.size(); }

  double value(std::size_t function, std::size_t optimizer, std::size_t criterion) const {
    return values_[(function * optimizer_count() + optimizer) * criterion_count() + criterion];
  }

  /// All criterion values of one optimizer on one function.
  std::span<const double> criterion_vector(std::size_t function, std::size_t optimizer) const {
    return {values_.data() + (function * optimizer_count() + optimizer) * criterion_count(),
            criterion_count()};
  }

  std::optional<std::size_t> find_function(std::string_view name) const {
    for (std::size_t f = 0; f < functions_.size(); ++f)
      if (functions_[f] == name) return f;
    return std::nullopt;
  }

  std::vector<Direction> directions() const {
    std::vector<Direction> d;
    d.reserve(criteria_.size());
    for (const auto& c : criteria_) d.push_back(c.direction);
    return d;
  }

 private:
  CriteriaTable() = default;
  UniversePtr universe_;
  std::vector<std::string> functions_;
  std::vector<CriterionSpec> criteria_;
  std::vector<double> values_;  // (function, optimizer, criterion), criterion fastest
};

/// What to do when two optimizers have exactly equal criterion vectors.
/// `drop_function` excludes the whole test function and reports it; it is
/// never removed silently.
enum class TiePolicy { error_on_tie, drop_function };

enum class Comparison { dominates, dominated_by, incomparable, indifferent };

/// Pareto verdict for `a` against `b`: dominates iff `a` is at least as good
/// everywhere and strictly better somewhere; indifferent iff all values are
/// exactly equal; incomparable iff the criteria contradict each other. No
/// tolerance is applied; pre-round the inputs for coarser ties.
inline Comparison pareto_compare(std::span<const double> a, std::span<const double> b,
                                 std::span<const Direction> directions) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
  if (a.size() != directions.size()) throw LengthMismatch(a.size(), directions.size());
  bool a_better = false, b_better = false;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (!std::isfinite(a[c]) || !std::isfinite(b[c])) throw NonFiniteValue();
    if (a[c] == b[c]) continue;
    const bool a_wins = directions[c] == Direction::minimize ? a[c] < b[c] : a[c] > b[c];
    (a_wins ? a_better : b_better) = true;
  }
  if (a_better && b_better) return Comparison::incomparable;
  if (a_better) return Comparison::dominates;
  if (b_better) return Comparison::dominated_by;
  return Comparison::indifferent;
}

/// A test function excluded because at least one optimizer pair was
/// indifferent; lists every tied pair by label.
struct TieOutcome {
  std::string function;
  std::vector<std::pair<std::string, std::string>> tied_pairs;
};

struct TieDetected : Error {
  TieOutcome outcome;
  explicit TieDetected(TieOutcome o)
      : Error("indifferent optimizers on test function " + o.function + " (first tied pair: " +
              o.tied_pairs.front().first + ", " + o.tied_pairs.front().second + ")"),
        outcome(std::move(o)) {}
};

/// One poset per test function: j above i iff optimizer j Pareto-dominates
/// optimizer i on this function. Strict dominance is transitive and
/// antisymmetric; construction re-proves both.
inline std::variant<Poset, TieOutcome> poset_from_function(const CriteriaTable& table,
                                                           std::string_view function,
                                                           TiePolicy policy) {
  const auto f = table.find_function(function);
  if (!f) throw UnknownFunction(std::string(function));
  const std::size_t d = table.optimizer_count();
  const auto directions = table.directions();
  std::vector<Pair> pairs;
  TieOutcome tie{std::string(function), {}};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      switch (pareto_compare(table.criterion_vector(*f, i), table.criterion_vector(*f, j), directions)) {
        case Comparison::dominates:
          pairs.push_back({j, i});
          break;
        case Comparison::dominated_by:
          pairs.push_back({i, j});
          break;
        case Comparison::indifferent:
          tie.tied_pairs.emplace_back(table.universe()->label(i), table.universe()->label(j));
          break;
        case Comparison::incomparable:
          break;
      }
    }
  }
  if (!tie.tied_pairs.empty()) {
    if (policy == TiePolicy::error_on_tie) throw TieDetected(std::move(tie));
    return tie;
  }
  return Poset::checked(Relation::from_pairs(table.universe(), pairs));
}

struct SuiteSample {
  PosetSample sample;
  std::vector<TieOutcome> dropped;
};

/// Builds the per-function posets for a whole suite and groups duplicates.
/// Under `drop_function`, tied functions are collected into `dropped`.
inline SuiteSample sample_from_suite(const CriteriaTable& table, TiePolicy policy) {
  std::vector<Poset> observed;
  std::vector<std::string> names;
  std::vector<TieOutcome> dropped;
  for (const std::string& fn : table.functions()) {
    auto outcome = poset_from_function(table, fn, policy);
    if (std::holds_alternative<TieOutcome>(outcome)) {
      dropped.push_back(std::get<TieOutcome>(std::move(outcome)));
    } else {
      observed.push_back(std::get<Poset>(std::move(outcome)));
      names.push_back(fn);
    }
  }
  if (observed.empty()) throw AllFunctionsDropped();
  return {PosetSample::from_observations(std::move(observed), std::move(names)), std::move(dropped)};
}

}  // namespace ufgdepth
