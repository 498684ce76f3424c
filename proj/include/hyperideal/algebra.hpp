#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperideal/report.hpp"
#include "hyperideal/subset.hpp"

namespace hyperideal {

// A finite hypergroupoid: carrier {0..n-1} and an n×n table whose entry
// (a,b) is the hyperproduct a∘b, a nonempty subset of the carrier.  The
// fields are plain so that invalid tables can be built and fed to
// validate(); every operation assumes a table that validates.
struct Hypergroupoid {
  int n = 0;
  std::vector<Subset> table;  // row-major, entry (a,b) at a*n + b

  Hypergroupoid() = default;
  explicit Hypergroupoid(int order) : n(order), table(static_cast<std::size_t>(order) * order) {}

  Subset entry(int a, int b) const {
    check_element(a);
    check_element(b);
    return table[static_cast<std::size_t>(a) * n + b];
  }
  void set_entry(int a, int b, Subset value) {
    check_element(a);
    check_element(b);
    table[static_cast<std::size_t>(a) * n + b] = value;
  }
  void check_element(int x) const {
    if (x < 0 || x >= n) throw std::out_of_range("element out of carrier range");
  }

  friend bool operator==(const Hypergroupoid&, const Hypergroupoid&) = default;
};

// A bare set of ordered pairs on the carrier, read (x,y) as "x ≤ y".  No
// reflexivity, transitivity or compatibility with the hyperoperation is
// assumed or enforced anywhere.
class Relation {
 public:
  Relation() = default;

  static Relation identity(int n) {
    Relation r;
    for (int x = 0; x < n; ++x) r.pairs_.emplace_back(x, x);
    return r;
  }
  static Relation from_pairs(std::vector<std::pair<int, int>> pairs) {
    Relation r;
    r.pairs_ = std::move(pairs);
    std::sort(r.pairs_.begin(), r.pairs_.end());
    r.pairs_.erase(std::unique(r.pairs_.begin(), r.pairs_.end()), r.pairs_.end());
    return r;
  }

  void add(int x, int y) {
    std::pair<int, int> p{x, y};
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
    if (it == pairs_.end() || *it != p) pairs_.insert(it, p);
  }
  bool contains(int x, int y) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), std::pair<int, int>{x, y});
  }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<std::pair<int, int>> pairs_;  // sorted, unique
};

// Hypergroupoid together with its ≤ relation.  A plain hypergroupoid is
// modeled with the identity relation, which makes every downward-closure
// condition vacuous.
struct LeHypergroupoid {
  Hypergroupoid h;
  Relation le;

  int order() const { return h.n; }

  friend bool operator==(const LeHypergroupoid&, const LeHypergroupoid&) = default;
};

namespace detail {
inline void check_operand(const Hypergroupoid& h, Subset s, const char* what) {
  if (s.is_empty()) throw std::invalid_argument(std::string(what) + " requires a nonempty subset");
  if (!s.subset_of(Subset::full(h.n))) throw std::out_of_range(std::string(what) + ": subset element out of carrier range");
}
}  // namespace detail

// Induced product on nonempty subsets: A*B is the union of a∘b over all
// a∈A, b∈B.  Empty operands are rejected, the operation is only defined on
// nonempty subsets.
inline Subset subset_product(const Hypergroupoid& h, Subset a, Subset b) {
  detail::check_operand(h, a, "subset product");
  detail::check_operand(h, b, "subset product");
  Subset out;
  for (int x : a)
    for (int y : b) out |= h.entry(x, y);
  return out;
}

// x ∈ A*B without building the whole union: true iff x ∈ a∘b for some a∈A,
// b∈B.
inline bool product_membership(const Hypergroupoid& h, int x, Subset a, Subset b) {
  h.check_element(x);
  detail::check_operand(h, a, "product membership");
  detail::check_operand(h, b, "product membership");
  for (int p : a)
    for (int q : b)
      if (h.entry(p, q).contains(x)) return true;
  return false;
}

// {x}*{y} must come out as exactly the table cell x∘y; true on every cell of
// every valid table, so this doubles as a self-test of subset_product.
inline bool singleton_product_is_circ(const Hypergroupoid& h, int x, int y) {
  return subset_product(h, Subset::single(x), Subset::single(y)) == h.entry(x, y);
}

// Checks the representation invariants: n ≥ 1, an n×n table of nonempty
// in-range cells, all relation pairs in range.  Violations come back as a
// failed report naming the offending cell or pair, never as an exception.
inline PropertyReport validate(const LeHypergroupoid& lh) {
  const char* name = "structure-valid";
  const Hypergroupoid& h = lh.h;
  if (h.n < 1) return PropertyReport::fail(name, {"order", {h.n}, {}});
  if (h.n > kMaxElements) return PropertyReport::fail(name, {"order", {h.n}, {}});
  if (h.table.size() != static_cast<std::size_t>(h.n) * h.n)
    return PropertyReport::fail(name, {"table-shape", {static_cast<int>(h.table.size())}, {}});
  Subset carrier = Subset::full(h.n);
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b) {
      Subset cell = h.table[static_cast<std::size_t>(a) * h.n + b];
      if (cell.is_empty()) return PropertyReport::fail(name, {"empty-cell", {a, b}, {}});
      if (!cell.subset_of(carrier)) {
        int offender = *(cell - carrier).begin();
        return PropertyReport::fail(name, {"cell-range", {a, b, offender}, {}});
      }
    }
  for (auto [x, y] : lh.le.pairs())
    if (x < 0 || x >= h.n || y < 0 || y >= h.n)
      return PropertyReport::fail(name, {"relation-range", {x, y}, {}});
  return PropertyReport::pass(name);
}

}  // namespace hyperideal
