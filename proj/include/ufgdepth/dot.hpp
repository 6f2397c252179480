#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ufgdepth/relation.hpp"

namespace ufgdepth {

namespace detail {

inline std::string dot_quote(const std::string& label) {
  std::string out = "\"";
  for (char ch : label) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace detail

/// Hasse diagram of the poset: cover edges only, drawn dominated -> dominating
/// with the dominating optimizer ranked above (rankdir=BT). Nodes appear in
/// universe order and edges in sorted index order, so output is deterministic.
inline std::string write_hasse_dot(const Poset& p) {
  std::vector<Pair> edges = transitive_reduction(p);
  std::sort(edges.begin(), edges.end());
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < p.size(); ++k)
    out += "  " + detail::dot_quote(p.universe()->label(k)) + ";\n";
  for (const Pair& e : edges)
    out += "  " + detail::dot_quote(p.universe()->label(e.below)) + " -> " +
           detail::dot_quote(p.universe()->label(e.above)) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace ufgdepth
