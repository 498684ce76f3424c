#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyperideal/hyperideal.hpp"

// Command-line front end.  Every command prints a single JSON document to
// stdout (indented with --pretty) and exits with:
//   0  property holds / run clean / listing produced
//   1  property fails / witnesses found
//   2  usage error, unreadable or malformed input, enumeration cap hit

namespace hyperideal::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "0,2" → Subset; rejects empty lists and out-of-range indices
inline Subset parse_subset_arg(const std::string& text, int n) {
  Subset out;
  std::istringstream in(text);
  std::string item;
  bool any = false;
  while (std::getline(in, item, ',')) {
    auto v = io_detail::to_int(item);
    if (!v) throw std::runtime_error("bad subset element '" + item + "'");
    if (*v < 0 || *v >= n)
      throw std::runtime_error("subset element " + item + " out of range for n=" + std::to_string(n));
    out = out.with(static_cast<int>(*v));
    any = true;
  }
  if (!any) throw std::runtime_error("subset must list at least one element");
  return out;
}

inline std::vector<Rational> parse_grid_arg(const std::string& text) {
  std::vector<Rational> grid;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto g = parse_rational(item);
    if (!g || *g < Rational(0, 1) || *g > Rational(1, 1))
      throw std::runtime_error("bad grade '" + item + "' in grid (need rationals in [0,1])");
    grid.push_back(*g);
  }
  if (grid.empty()) throw std::runtime_error("grade grid must list at least one value");
  return grid;
}

inline void emit(const json& j, bool pretty, std::ostream& out) {
  out << (pretty ? j.dump(2) : j.dump()) << "\n";
}

using CrispDecider = std::function<PropertyReport(const LeHypergroupoid&, Subset)>;
using FuzzyDecider = std::function<PropertyReport(const LeHypergroupoid&, const FuzzySubset&)>;

inline CrispDecider crisp_decider(const std::string& name) {
  if (name == "subgroupoid") return [](const LeHypergroupoid& lh, Subset a) { return is_subgroupoid(lh, a); };
  if (name == "left-ideal") return [](const LeHypergroupoid& lh, Subset a) { return is_left_ideal(lh, a); };
  if (name == "right-ideal") return [](const LeHypergroupoid& lh, Subset a) { return is_right_ideal(lh, a); };
  if (name == "ideal") return [](const LeHypergroupoid& lh, Subset a) { return is_ideal(lh, a); };
  if (name == "prime") return [](const LeHypergroupoid& lh, Subset a) { return is_prime_subset(lh, a); };
  if (name == "semiprime") return [](const LeHypergroupoid& lh, Subset a) { return is_semiprime_subset(lh, a); };
  if (name == "prime-ideal") return [](const LeHypergroupoid& lh, Subset a) { return is_prime_ideal(lh, a); };
  if (name == "semiprime-ideal") return [](const LeHypergroupoid& lh, Subset a) { return is_semiprime_ideal(lh, a); };
  throw std::runtime_error("unknown property '" + name + "'");
}

inline FuzzyDecider fuzzy_decider(const std::string& name) {
  if (name == "fuzzy-ideal") return [](const LeHypergroupoid& lh, const FuzzySubset& f) { return is_fuzzy_ideal(lh, f); };
  if (name == "fuzzy-prime") return [](const LeHypergroupoid& lh, const FuzzySubset& f) { return is_fuzzy_prime_subset(lh, f); };
  if (name == "fuzzy-semiprime") return [](const LeHypergroupoid& lh, const FuzzySubset& f) { return is_fuzzy_semiprime_subset(lh, f); };
  if (name == "fuzzy-prime-ideal") return [](const LeHypergroupoid& lh, const FuzzySubset& f) { return is_fuzzy_prime_ideal(lh, f); };
  if (name == "fuzzy-semiprime-ideal") return [](const LeHypergroupoid& lh, const FuzzySubset& f) { return is_fuzzy_semiprime_ideal(lh, f); };
  throw std::runtime_error("unknown fuzzy property '" + name + "'");
}

inline IdealFilter ideal_filter(const std::string& name) {
  if (name == "left-ideal") return IdealFilter::left;
  if (name == "right-ideal") return IdealFilter::right;
  if (name == "ideal") return IdealFilter::two_sided;
  if (name == "prime-ideal") return IdealFilter::prime;
  if (name == "semiprime-ideal") return IdealFilter::semiprime;
  throw std::runtime_error("unknown filter '" + name + "'");
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"deciders and exhaustive verifiers for finite ≤-hypergroupoids"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string file, subset_arg, property, fuzzy_name, filter_arg = "ideal";
  std::string theorem, claim, grid_arg;
  int order = 0;
  bool exhaustive = false, table_only = false;
  std::uint64_t samples = 0, seed = 0;
  int max_witnesses = 10;

  auto* validate_cmd = app.add_subcommand("validate", "check the structural invariants of a file");
  validate_cmd->add_option("file", file, "lehyper v1 structure file")->required();
  validate_cmd->fallthrough();

  auto* check_cmd = app.add_subcommand("check", "decide a crisp property of a subset");
  check_cmd->add_option("file", file)->required();
  check_cmd->add_option("--subset", subset_arg, "comma-separated element indices")->required();
  check_cmd->add_option("--property", property,
                        "subgroupoid|left-ideal|right-ideal|ideal|prime|semiprime|prime-ideal|semiprime-ideal")
      ->required();
  check_cmd->fallthrough();

  auto* fuzzy_cmd = app.add_subcommand("check-fuzzy", "decide a fuzzy property of a named fuzzy subset");
  fuzzy_cmd->add_option("file", file)->required();
  fuzzy_cmd->add_option("--fuzzy", fuzzy_name, "name of a fuzzy subset declared in the file")->required();
  fuzzy_cmd->add_option("--property", property,
                        "fuzzy-ideal|fuzzy-prime|fuzzy-semiprime|fuzzy-prime-ideal|fuzzy-semiprime-ideal")
      ->required();
  fuzzy_cmd->fallthrough();

  auto* char_cmd = app.add_subcommand("char", "print the characteristic function of a subset");
  char_cmd->add_option("file", file)->required();
  char_cmd->add_option("--subset", subset_arg)->required();
  char_cmd->fallthrough();

  auto* enum_cmd = app.add_subcommand("enumerate", "list all subsets passing an ideal filter");
  enum_cmd->add_option("file", file)->required();
  enum_cmd->add_option("--filter", filter_arg, "ideal|left-ideal|right-ideal|prime-ideal|semiprime-ideal");
  enum_cmd->fallthrough();

  auto* verify_cmd = app.add_subcommand("verify", "check a correspondence law over a structure universe");
  verify_cmd->add_option("--theorem", theorem, "P2|P7|P8|P10|P14|D5|D11|R13|FMAX")->required();
  verify_cmd->add_option("--order", order, "carrier size of the universe")->required();
  verify_cmd->add_flag("--exhaustive", exhaustive, "every table and relation of this order");
  verify_cmd->add_option("--samples", samples, "number of seeded random structures");
  verify_cmd->add_option("--seed", seed, "64-bit RNG seed")->envname("HYPERIDEAL_SEED");
  verify_cmd->add_flag("--table-only", table_only, "restrict to the identity relation");
  verify_cmd->add_option("--grid", grid_arg, "grade grid for fuzzy runs, e.g. 0,1/2,1");
  verify_cmd->add_option("--max-witnesses", max_witnesses, "cap on recorded failures");
  verify_cmd->fallthrough();

  auto* search_cmd = app.add_subcommand("search", "hunt for counterexamples to a claim");
  search_cmd->add_option("--claim", claim, "p14-literal")->required();
  search_cmd->add_option("--file", file, "restrict the search to one structure file");
  search_cmd->add_option("--order", order);
  search_cmd->add_flag("--exhaustive", exhaustive);
  search_cmd->add_option("--samples", samples);
  search_cmd->add_option("--seed", seed)->envname("HYPERIDEAL_SEED");
  search_cmd->add_flag("--table-only", table_only);
  search_cmd->add_option("--max-witnesses", max_witnesses);
  search_cmd->fallthrough();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto load = [&]() -> ParsedStructure {
    auto parsed = parse_structure(detail::read_file(file));
    return parsed;
  };
  auto make_universe = [&]() -> Universe {
    if (exhaustive && samples > 0) throw std::runtime_error("choose either --exhaustive or --samples");
    if (exhaustive) {
      Universe u = Universe::exhaustive(order, table_only);
      u.max_witnesses = max_witnesses;
      return u;
    }
    if (samples > 0) {
      Universe u = Universe::random(order, samples, seed);
      u.identity_relation_only = table_only;
      u.max_witnesses = max_witnesses;
      return u;
    }
    throw std::runtime_error("pick a universe: --exhaustive or --samples K");
  };

  try {
    if (app.got_subcommand(validate_cmd)) {
      auto parsed = load();
      PropertyReport report = validate(parsed.structure);
      detail::emit(report_to_json(report, parsed.structure), pretty, out);
      return report.holds ? 0 : 1;
    }
    if (app.got_subcommand(check_cmd)) {
      auto parsed = load();
      Subset a = detail::parse_subset_arg(subset_arg, parsed.structure.h.n);
      PropertyReport report = detail::crisp_decider(property)(parsed.structure, a);
      detail::emit(report_to_json(report, parsed.structure), pretty, out);
      return report.holds ? 0 : 1;
    }
    if (app.got_subcommand(fuzzy_cmd)) {
      auto parsed = load();
      const FuzzySubset* f = parsed.find_fuzzy(fuzzy_name);
      if (!f) throw std::runtime_error("no fuzzy subset named '" + fuzzy_name + "' in " + file);
      PropertyReport report = detail::fuzzy_decider(property)(parsed.structure, *f);
      detail::emit(report_to_json(report, parsed.structure), pretty, out);
      return report.holds ? 0 : 1;
    }
    if (app.got_subcommand(char_cmd)) {
      auto parsed = load();
      Subset a = detail::parse_subset_arg(subset_arg, parsed.structure.h.n);
      FuzzySubset f = characteristic_function(parsed.structure, a);
      json j;
      j["command"] = "char";
      j["subset"] = a.elements();
      json grades = json::array();
      for (const Rational& g : f.grades()) grades.push_back(g.str());
      j["grades"] = std::move(grades);
      j["structure_digest"] = structure_digest(parsed.structure);
      j["tool_version"] = kToolVersion;
      detail::emit(j, pretty, out);
      return 0;
    }
    if (app.got_subcommand(enum_cmd)) {
      auto parsed = load();
      auto subsets = enumerate_ideals(parsed.structure, detail::ideal_filter(filter_arg));
      json j;
      j["command"] = "enumerate";
      j["filter"] = filter_arg;
      json list = json::array();
      for (Subset s : subsets) list.push_back(s.elements());
      j["subsets"] = std::move(list);
      j["structure_digest"] = structure_digest(parsed.structure);
      j["tool_version"] = kToolVersion;
      detail::emit(j, pretty, out);
      return 0;
    }
    if (app.got_subcommand(verify_cmd)) {
      Universe u = make_universe();
      if (!grid_arg.empty()) u.grade_grid = detail::parse_grid_arg(grid_arg);
      std::vector<VerificationRun> runs;
      if (theorem == "P2") runs = {verify_prop2_equivalence(u)};
      else if (theorem == "P7") runs = verify_prop7(u);
      else if (theorem == "P8") runs = {verify_prop8(u)};
      else if (theorem == "P10") runs = {verify_prop10(u)};
      else if (theorem == "P14") runs = {verify_prop14_forward(u)};
      else if (theorem == "D5") runs = {verify_def5_equivalence(u)};
      else if (theorem == "D11") runs = {verify_def11_equivalence(u)};
      else if (theorem == "R13") runs = {verify_remark13(u)};
      else if (theorem == "FMAX") runs = {verify_fuzzy_max_equivalence(u)};
      else throw std::runtime_error("unknown theorem '" + theorem + "'");
      json j = json::array();
      bool clean = true;
      for (const VerificationRun& run : runs) {
        j.push_back(run_to_json(run));
        clean = clean && run.clean();
      }
      detail::emit(j, pretty, out);
      return clean ? 0 : 1;
    }
    if (app.got_subcommand(search_cmd)) {
      if (claim != "p14-literal") throw std::runtime_error("unknown claim '" + claim + "'");
      Universe u;
      if (!file.empty()) {
        auto parsed = load();
        if (order > 0 && order != parsed.structure.h.n)
          throw std::runtime_error("--order disagrees with the file's carrier size");
        u = Universe::single(parsed.structure, file);
        u.max_witnesses = max_witnesses;
      } else {
        if (order < 1) throw std::runtime_error("search needs --file or --order");
        u = make_universe();
      }
      VerificationRun run = search_prop14_literal_counterexample(u);
      detail::emit(run_to_json(run), pretty, out);
      return run.violations > 0 ? 1 : 0;
    }
  } catch (const parse_error& e) {
    err << file << ": " << e.what() << "\n";
    return 2;
  } catch (const cap_error& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  return 2;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace hyperideal::cli
