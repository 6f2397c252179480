#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ufgdepth/ufgdepth.hpp>

namespace fs = std::filesystem;

namespace {

// Exit codes: 0 success, 1 oracle mismatch or any other runtime failure,
// 2 tie under --ties error, 3 unreadable or malformed input.
constexpr int kExitRuntime = 1;
constexpr int kExitTie = 2;
constexpr int kExitParse = 3;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ufgdepth::ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ufgdepth::Error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw ufgdepth::Error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

ufgdepth::TiePolicy policy_from_flag(const std::string& ties) {
  return ties == "error" ? ufgdepth::TiePolicy::error_on_tie : ufgdepth::TiePolicy::drop_function;
}

ufgdepth::SuiteDocument load_suite(const fs::path& path) {
  return ufgdepth::parse_suite_csv(read_file(path), path.string());
}

/// Query files list one strict pair per line as `a<b`, meaning optimizer b
/// outperforms a. The listed pairs are transitively closed before the poset
/// axioms are checked, so cover (Hasse) edges suffice.
ufgdepth::Poset parse_query(const std::string& text, const ufgdepth::UniversePtr& universe) {
  std::vector<ufgdepth::Pair> pairs;
  std::istringstream in(text);
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t lt = line.find('<');
    if (lt == std::string::npos || lt == 0 || lt + 1 == line.size())
      throw ufgdepth::ParseError("expected a<b", row);
    const std::string a = line.substr(0, lt), b = line.substr(lt + 1);
    const auto ia = universe->find(a), ib = universe->find(b);
    if (!ia) throw ufgdepth::ParseError("unknown optimizer \"" + a + "\"", row);
    if (!ib) throw ufgdepth::ParseError("unknown optimizer \"" + b + "\"", row);
    pairs.push_back({*ia, *ib});
  }
  try {
    return ufgdepth::Poset::checked(
        ufgdepth::transitive_closure(ufgdepth::Relation::from_pairs(universe, pairs)));
  } catch (const ufgdepth::ValidationError& e) {
    throw ufgdepth::ParseError(std::string("query is not a partial order: ") + e.what());
  }
}

std::string depth_line(const ufgdepth::Rational& r) {
  return ufgdepth::rational_string(r) + " (" + ufgdepth::decimal_string(r) + ")";
}

int run_analyze(const fs::path& input, const std::string& ties,
                std::optional<std::size_t> max_ufg_size, const fs::path& out_report,
                std::optional<fs::path> out_hasse_dir) {
  const auto doc = load_suite(input);
  const auto result = ufgdepth::analyze_table(doc.table, policy_from_flag(ties), max_ufg_size);
  write_file_atomic(out_report, ufgdepth::write_report_json(result));
  if (out_hasse_dir) {
    fs::create_directories(*out_hasse_dir);
    const auto& sample = result.suite.sample;
    for (std::size_t k = 0; k < sample.unique_count(); ++k) {
      char name[32];
      std::snprintf(name, sizeof name, "poset_%03zu.dot", k);
      write_file_atomic(*out_hasse_dir / name, ufgdepth::write_hasse_dot(sample.unique_posets()[k]));
    }
  }
  std::cout << "report written to " << out_report.string() << "\n";
  return 0;
}

int run_depth(const fs::path& input, const std::string& ties, const fs::path& query_path) {
  const auto doc = load_suite(input);
  const auto suite = ufgdepth::sample_from_suite(doc.table, policy_from_flag(ties));
  const auto family = ufgdepth::enumerate_ufg(suite.sample);
  const auto query = parse_query(read_file(query_path), doc.table.universe());
  std::cout << "depth " << depth_line(ufgdepth::ufg_depth(suite.sample, family, query)) << "\n";
  return 0;
}

int run_ufg(const fs::path& input, const std::string& ties) {
  const auto doc = load_suite(input);
  const auto suite = ufgdepth::sample_from_suite(doc.table, policy_from_flag(ties));
  const auto family = ufgdepth::enumerate_ufg(suite.sample);
  const auto& sample = suite.sample;
  for (std::size_t k = 0; k < sample.unique_count(); ++k) {
    std::cout << "p" << k << ":";
    for (const std::string& fn : sample.provenance(k)) std::cout << " " << fn;
    std::cout << " (multiplicity " << sample.multiplicity(k) << ")\n";
  }
  for (std::size_t s = 0; s < family.sets.size(); ++s) {
    std::cout << "set {";
    for (std::size_t t = 0; t < family.sets[s].size(); ++t)
      std::cout << (t ? "," : "") << "p" << family.sets[s][t];
    std::cout << "} weight " << ufgdepth::rational_string(family.weights[s]) << "\n";
  }
  std::cout << "family size " << family.sets.size() << "\n";
  std::cout << "truncated " << (family.truncated ? "yes" : "no") << "\n";
  if (family.normalizer)
    std::cout << "normalizer " << depth_line(*family.normalizer) << "\n";
  else
    std::cout << "normalizer none (empty family)\n";
  return 0;
}

int run_oracle_check(const fs::path& input) {
  const auto doc = load_suite(input);
  const auto suite = ufgdepth::sample_from_suite(doc.table, ufgdepth::TiePolicy::drop_function);
  const auto check = ufgdepth::oracle_check(suite.sample);
  if (!check.ok) {
    std::cerr << "oracle mismatch: " << check.detail << "\n";
    return kExitRuntime;
  }
  std::cout << "oracle check passed (" << suite.sample.unique_count() << " unique posets)\n";
  return 0;
}

int run_hasse(const fs::path& input, const std::string& function, const fs::path& out) {
  const auto doc = load_suite(input);
  const auto outcome =
      ufgdepth::poset_from_function(doc.table, function, ufgdepth::TiePolicy::error_on_tie);
  write_file_atomic(out, ufgdepth::write_hasse_dot(std::get<ufgdepth::Poset>(outcome)));
  std::cout << "diagram written to " << out.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"union-free generic depth analysis of optimizer benchmark suites"};
  app.require_subcommand(1);

  std::string input, ties, function;
  std::string query_path, out_report, out_hasse_dir, out_dot;
  std::size_t max_ufg_size = 0;

  const auto add_common = [&](CLI::App* cmd, bool with_ties) {
    cmd->add_option("--input", input, "benchmark suite CSV")->required();
    if (with_ties)
      cmd->add_option("--ties", ties, "tie policy")
          ->required()
          ->check(CLI::IsMember({"error", "drop"}));
  };

  auto* analyze = app.add_subcommand("analyze", "full pipeline: family, depths, report");
  add_common(analyze, true);
  auto* max_opt = analyze->add_option("--max-ufg-size", max_ufg_size,
                                      "cap on ufg set size (marks results truncated)");
  analyze->add_option("--out-report", out_report, "output JSON path")->required();
  auto* hasse_dir_opt =
      analyze->add_option("--out-hasse-dir", out_hasse_dir, "directory for Hasse diagrams");

  auto* depth = app.add_subcommand("depth", "depth of a user-supplied poset");
  add_common(depth, true);
  depth->add_option("--query", query_path, "edge-list file, one a<b per line")->required();

  auto* ufg = app.add_subcommand("ufg", "print the observed ufg family");
  add_common(ufg, true);

  auto* oracle = app.add_subcommand("oracle-check", "diff fast path against brute force");
  add_common(oracle, false);

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of one test function");
  add_common(hasse, false);
  hasse->add_option("--function", function, "test function name")->required();
  hasse->add_option("--out", out_dot, "output DOT path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed())
      return run_analyze(input, ties,
                         max_opt->count() ? std::optional(max_ufg_size) : std::nullopt, out_report,
                         hasse_dir_opt->count() ? std::optional(fs::path(out_hasse_dir))
                                                : std::nullopt);
    if (depth->parsed()) return run_depth(input, ties, query_path);
    if (ufg->parsed()) return run_ufg(input, ties);
    if (oracle->parsed()) return run_oracle_check(input);
    if (hasse->parsed()) return run_hasse(input, function, out_dot);
  } catch (const ufgdepth::TieDetected& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTie;
  } catch (const ufgdepth::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
