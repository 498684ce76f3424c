#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hyperideal/algebra.hpp"
#include "hyperideal/fuzzy.hpp"
#include "hyperideal/report.hpp"
#include "hyperideal/theorems.hpp"

// Text format ("lehyper v1") and JSON report rendering.
//
//   lehyper v1
//   n 2
//   cell 0 0 : 0
//   cell 0 1 : 0 1
//   ...
//   le 0 1
//   fuzzy fA : 1 0
//
// Every cell must appear exactly once and list at least one element; grades
// are integers or p/q fractions in [0,1].  Blank lines and lines starting
// with '#' are skipped.  Serialization is canonical: cells row-major with
// ascending elements, relation pairs sorted, fuzzy subsets sorted by name —
// so parse ∘ serialize is the identity on canonical files.

namespace hyperideal {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

using NamedFuzzy = std::vector<std::pair<std::string, FuzzySubset>>;

struct ParsedStructure {
  LeHypergroupoid structure;
  NamedFuzzy fuzzy;  // in file order

  const FuzzySubset* find_fuzzy(std::string_view name) const {
    for (const auto& [n, f] : fuzzy)
      if (n == name) return &f;
    return nullptr;
  }
};

namespace io_detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::optional<long long> to_int(const std::string& s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace io_detail

inline ParsedStructure parse_structure(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  int n = -1;
  int n_line = 0;
  std::vector<bool> cell_seen;
  Hypergroupoid h;
  Relation le;
  NamedFuzzy fuzzy;

  auto element = [&](const std::string& tok, int at) {
    auto v = io_detail::to_int(tok);
    if (!v) throw parse_error(at, "expected an element index, got '" + tok + "'");
    if (*v < 0 || *v >= n) throw parse_error(at, "element " + tok + " out of range for n=" + std::to_string(n));
    return static_cast<int>(*v);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = io_detail::tokens(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (!header_seen) {
      if (toks.size() != 2 || toks[0] != "lehyper" || toks[1] != "v1")
        throw parse_error(lineno, "expected header 'lehyper v1'");
      header_seen = true;
      continue;
    }
    const std::string& kw = toks[0];
    if (kw == "n") {
      if (n >= 0) throw parse_error(lineno, "duplicate 'n' line");
      if (toks.size() != 2) throw parse_error(lineno, "expected 'n <count>'");
      auto v = io_detail::to_int(toks[1]);
      if (!v || *v < 1) throw parse_error(lineno, "carrier size must be a positive integer");
      if (*v > kMaxElements)
        throw parse_error(lineno, "carrier size exceeds the supported maximum of " +
                                      std::to_string(kMaxElements));
      n = static_cast<int>(*v);
      n_line = lineno;
      h = Hypergroupoid(n);
      cell_seen.assign(static_cast<std::size_t>(n) * n, false);
    } else if (kw == "cell") {
      if (n < 0) throw parse_error(lineno, "'cell' before 'n'");
      if (toks.size() < 4 || toks[3] != ":")
        throw parse_error(lineno, "expected 'cell <a> <b> : <elements>'");
      int a = element(toks[1], lineno), b = element(toks[2], lineno);
      std::size_t idx = static_cast<std::size_t>(a) * n + b;
      if (cell_seen[idx])
        throw parse_error(lineno, "duplicate cell (" + std::to_string(a) + "," + std::to_string(b) + ")");
      cell_seen[idx] = true;
      if (toks.size() == 4) throw parse_error(lineno, "empty cell: the hyperproduct must be nonempty");
      Subset cell;
      for (std::size_t k = 4; k < toks.size(); ++k) cell = cell.with(element(toks[k], lineno));
      h.set_entry(a, b, cell);
    } else if (kw == "le") {
      if (n < 0) throw parse_error(lineno, "'le' before 'n'");
      if (toks.size() != 3) throw parse_error(lineno, "expected 'le <x> <y>'");
      le.add(element(toks[1], lineno), element(toks[2], lineno));
    } else if (kw == "fuzzy") {
      if (n < 0) throw parse_error(lineno, "'fuzzy' before 'n'");
      if (toks.size() < 3 || toks[2] != ":")
        throw parse_error(lineno, "expected 'fuzzy <name> : <grades>'");
      const std::string& name = toks[1];
      for (const auto& [existing, f] : fuzzy)
        if (existing == name) throw parse_error(lineno, "duplicate fuzzy subset '" + name + "'");
      if (toks.size() - 3 != static_cast<std::size_t>(n))
        throw parse_error(lineno, "fuzzy subset needs exactly " + std::to_string(n) + " grades");
      std::vector<Rational> grades;
      for (std::size_t k = 3; k < toks.size(); ++k) {
        auto g = parse_rational(toks[k]);
        if (!g) throw parse_error(lineno, "malformed rational '" + toks[k] + "'");
        if (*g < Rational(0, 1) || *g > Rational(1, 1))
          throw parse_error(lineno, "grade " + toks[k] + " outside [0,1]");
        grades.push_back(*g);
      }
      fuzzy.emplace_back(name, FuzzySubset(std::move(grades)));
    } else {
      throw parse_error(lineno, "unknown directive '" + kw + "'");
    }
  }
  if (!header_seen) throw parse_error(lineno + 1, "missing header 'lehyper v1'");
  if (n < 0) throw parse_error(lineno + 1, "missing 'n' line");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!cell_seen[static_cast<std::size_t>(a) * n + b])
        throw parse_error(n_line, "missing cell (" + std::to_string(a) + "," + std::to_string(b) +
                                      "): the hyperoperation must be total");
  return {LeHypergroupoid{std::move(h), std::move(le)}, std::move(fuzzy)};
}

inline std::string serialize_structure(const LeHypergroupoid& lh, const NamedFuzzy& fuzzy) {
  std::string out = "lehyper v1\n";
  out += "n " + std::to_string(lh.h.n) + "\n";
  for (int a = 0; a < lh.h.n; ++a)
    for (int b = 0; b < lh.h.n; ++b) {
      out += "cell " + std::to_string(a) + " " + std::to_string(b) + " :";
      for (int e : lh.h.entry(a, b)) out += " " + std::to_string(e);
      out += "\n";
    }
  for (auto [x, y] : lh.le.pairs())
    out += "le " + std::to_string(x) + " " + std::to_string(y) + "\n";
  NamedFuzzy sorted = fuzzy;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [name, f] : sorted) {
    out += "fuzzy " + name + " :";
    for (const Rational& g : f.grades()) out += " " + g.str();
    out += "\n";
  }
  return out;
}

inline std::string serialize_structure(const LeHypergroupoid& lh) {
  return serialize_structure(lh, {});
}

// FNV-1a over the canonical text, as 16 hex digits.
inline std::string structure_digest(const LeHypergroupoid& lh) {
  std::string text = serialize_structure(lh);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

using json = nlohmann::ordered_json;

inline json witness_to_json(const Witness& w) {
  json j;
  j["kind"] = w.kind;
  j["elements"] = w.elements;
  if (!w.subsets.empty()) {
    json subsets = json::array();
    for (const Subset& s : w.subsets) subsets.push_back(s.elements());
    j["subsets"] = std::move(subsets);
  }
  return j;
}

inline json report_to_json(const PropertyReport& report, const LeHypergroupoid& lh) {
  json j;
  j["property"] = report.property;
  j["holds"] = report.holds;
  if (report.witness) j["witness"] = witness_to_json(*report.witness);
  j["structure_digest"] = structure_digest(lh);
  j["tool_version"] = kToolVersion;
  return j;
}

inline json universe_to_json(const Universe& u) {
  json j;
  switch (u.mode) {
    case Universe::Mode::exhaustive:
      j["mode"] = "exhaustive";
      j["order"] = u.order;
      if (u.identity_relation_only) j["relation"] = "identity";
      break;
    case Universe::Mode::random:
      j["mode"] = "random";
      j["order"] = u.order;
      j["samples"] = u.samples;
      if (u.identity_relation_only) j["relation"] = "identity";
      break;
    case Universe::Mode::single:
      j["mode"] = "file";
      j["order"] = u.order;
      j["file"] = u.label;
      break;
  }
  if (!u.grade_grid.empty()) {
    json grid = json::array();
    for (const Rational& g : u.grade_grid) grid.push_back(g.str());
    j["grid"] = std::move(grid);
  }
  return j;
}

inline json run_to_json(const VerificationRun& run) {
  json j;
  j["theorem_id"] = run.theorem_id;
  j["universe"] = universe_to_json(run.universe);
  j["structures_checked"] = run.structures_checked;
  json failures = json::array();
  for (const FailureRecord& f : run.failures) {
    json entry;
    entry["structure"] = serialize_structure(f.structure);
    if (f.subset) entry["subset"] = f.subset->elements();
    if (f.grades) {
      json grades = json::array();
      for (const Rational& g : f.grades->grades()) grades.push_back(g.str());
      entry["grades"] = std::move(grades);
    }
    entry["detail"] = f.detail;
    failures.push_back(std::move(entry));
  }
  j["failures"] = std::move(failures);
  if (run.universe.mode == Universe::Mode::random) j["seed"] = run.universe.seed;
  return j;
}

}  // namespace hyperideal
