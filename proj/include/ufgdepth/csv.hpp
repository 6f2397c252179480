#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ufgdepth/dominance.hpp"

namespace ufgdepth {

inline constexpr std::string_view kSuiteCsvHeader =
    "test_function,optimizer,criterion,direction,value";

/// A parsed benchmark suite plus enough metadata to reproduce the input.
struct SuiteDocument {
  CriteriaTable table;
  std::string source;
  std::size_t data_rows = 0;
};

namespace detail {

// Shortest decimal that round-trips to the same double.
inline std::string format_value(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace detail

/// Long-format CSV: one (function, optimizer, criterion) value per row, a
/// fixed direction per criterion, every combination present exactly once.
/// Functions, optimizers, and criteria are sorted lexicographically on the
/// way in, so row order never affects results. No quoting: names must not
/// contain commas or newlines. Row numbers in errors are 1-based and count
/// the header.
inline SuiteDocument parse_suite_csv(std::string_view text, std::string source = "<memory>") {
  struct RawRow {
    std::string function, optimizer, criterion;
    double value;
    std::size_t row;
  };

  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (line.ends_with('\r')) line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  if (lines.empty()) throw BadHeader("");
  if (lines.front() != kSuiteCsvHeader) throw BadHeader(std::string(lines.front()));

  std::vector<RawRow> rows;
  std::map<std::string, std::pair<Direction, std::size_t>> direction_of;  // criterion -> (dir, row)
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::size_t row = li + 1;
    const std::string_view line = lines[li];
    if (line.empty()) throw ParseError("empty line", row);
    const auto fields = detail::split_fields(line);
    if (fields.size() != 5)
      throw ParseError("expected 5 comma-separated fields, got " + std::to_string(fields.size()),
                       row);
    for (std::size_t k = 0; k < 4; ++k)
      if (fields[k].empty()) throw ParseError("empty field", row);

    Direction dir;
    if (fields[3] == "min") {
      dir = Direction::minimize;
    } else if (fields[3] == "max") {
      dir = Direction::maximize;
    } else {
      throw ParseError("direction must be \"min\" or \"max\", got \"" + std::string(fields[3]) +
                           "\"",
                       row);
    }

    double value = 0.0;
    const std::string_view raw = fields[4];
    const auto res = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (res.ec != std::errc{} || res.ptr != raw.data() + raw.size() || !std::isfinite(value))
      throw BadNumber(std::string(raw), row);

    const std::string criterion(fields[2]);
    const auto [it, inserted] = direction_of.try_emplace(criterion, dir, row);
    if (!inserted && it->second.first != dir) throw InconsistentDirection(criterion, row);
    rows.push_back({std::string(fields[0]), std::string(fields[1]), criterion, value, row});
  }
  if (rows.empty()) throw ParseError("no data rows");

  std::vector<std::string> functions, optimizers, criteria;
  for (const RawRow& r : rows) {
    functions.push_back(r.function);
    optimizers.push_back(r.optimizer);
    criteria.push_back(r.criterion);
  }
  const auto sort_unique = [](std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  sort_unique(functions);
  sort_unique(optimizers);
  sort_unique(criteria);

  const auto index_of = [](const std::vector<std::string>& v, const std::string& name) {
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), name) - v.begin());
  };

  const std::size_t d = optimizers.size(), c = criteria.size();
  std::vector<double> values(functions.size() * d * c, 0.0);
  std::vector<bool> seen(values.size(), false);
  for (const RawRow& r : rows) {
    const std::size_t cell = (index_of(functions, r.function) * d + index_of(optimizers, r.optimizer)) * c +
                             index_of(criteria, r.criterion);
    if (seen[cell]) throw DuplicateCell(r.function, r.optimizer, r.criterion, r.row);
    seen[cell] = true;
    values[cell] = r.value;
  }
  for (std::size_t f = 0; f < functions.size(); ++f)
    for (std::size_t o = 0; o < d; ++o)
      for (std::size_t k = 0; k < c; ++k)
        if (!seen[(f * d + o) * c + k]) throw MissingCell(functions[f], optimizers[o], criteria[k]);

  std::vector<CriterionSpec> specs;
  specs.reserve(c);
  for (const std::string& name : criteria) specs.push_back({name, direction_of.at(name).first});

  return {CriteriaTable::make(Universe::make(std::move(optimizers)), std::move(functions),
                              std::move(specs), std::move(values)),
          std::move(source), rows.size()};
}

/// The unique serialization parse_suite_csv maps back to the same table:
/// rows sorted by (function, optimizer, criterion), shortest round-trip
/// decimals, "\n" line ends, trailing newline.
inline std::string canonical_csv(const CriteriaTable& table) {
  const auto order_by_name = [](std::size_t count, auto&& name_at) {
    std::vector<std::size_t> idx(count);
    for (std::size_t i = 0; i < count; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return name_at(a) < name_at(b); });
    return idx;
  };
  const auto by_function = order_by_name(table.function_count(),
                                         [&](std::size_t f) { return table.functions()[f]; });
  const auto by_optimizer = order_by_name(table.optimizer_count(),
                                          [&](std::size_t o) { return table.universe()->label(o); });
  const auto by_criterion = order_by_name(table.criterion_count(),
                                          [&](std::size_t k) { return table.criteria()[k].name; });

  std::string out(kSuiteCsvHeader);
  out += '\n';
  for (std::size_t f : by_function) {
    for (std::size_t o : by_optimizer) {
      for (std::size_t k : by_criterion) {
        const CriterionSpec& spec = table.criteria()[k];
        out += table.functions()[f];
        out += ',';
        out += table.universe()->label(o);
        out += ',';
        out += spec.name;
        out += ',';
        out += spec.direction == Direction::minimize ? "min" : "max";
        out += ',';
        out += detail::format_value(table.value(f, o, k));
        out += '\n';
      }
    }
  }
  return out;
}

}  // namespace ufgdepth
