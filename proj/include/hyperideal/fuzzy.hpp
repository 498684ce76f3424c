#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperideal/algebra.hpp"
#include "hyperideal/rational.hpp"
#include "hyperideal/report.hpp"

// Fuzzy subsets and their ideal-theoretic deciders.  A fuzzy subset assigns
// each element an exact rational grade in [0,1]; all comparisons are exact.
//
//   fuzzy left ideal      x≤y ⇒ f(x)≥f(y),  and u∈x∘y ⇒ f(u)≥f(y)
//   fuzzy right ideal     x≤y ⇒ f(x)≥f(y),  and u∈x∘y ⇒ f(u)≥f(x)
//   fuzzy ideal           both; equivalently f(u) ≥ max{f(x),f(y)} on u∈x∘y
//                         together with the ≤ condition
//   fuzzy prime subset    u∈x∘y ⇒ f(u) ≤ max{f(x),f(y)}
//   fuzzy prime ideal     ≤ condition and f(u) = max{f(x),f(y)} on u∈x∘y
//   fuzzy semiprime subset u∈x∘x ⇒ f(x) ≥ f(u)
//   fuzzy semiprime ideal  fuzzy ideal whose diagonal satisfies f(u) = f(x)
//
// The fuzzy semiprime ideal decider keeps the full fuzzy-ideal conditions:
// the diagonal equality alone does not bound f on off-diagonal products, so
// dropping them would accept subsets that are not fuzzy ideals at all.

namespace hyperideal {

class FuzzySubset {
 public:
  FuzzySubset() = default;
  explicit FuzzySubset(std::vector<Rational> grades) : grades_(std::move(grades)) {
    for (const Rational& g : grades_)
      if (g < Rational(0, 1) || g > Rational(1, 1))
        throw std::invalid_argument("fuzzy grade outside [0,1]");
  }

  static FuzzySubset constant(int n, const Rational& g) {
    return FuzzySubset(std::vector<Rational>(static_cast<std::size_t>(n), g));
  }

  int size() const { return static_cast<int>(grades_.size()); }
  const Rational& grade(int x) const { return grades_.at(static_cast<std::size_t>(x)); }
  const std::vector<Rational>& grades() const { return grades_; }

  friend bool operator==(const FuzzySubset&, const FuzzySubset&) = default;

 private:
  std::vector<Rational> grades_;
};

namespace detail {
inline void check_fuzzy(const LeHypergroupoid& lh, const FuzzySubset& f) {
  if (f.size() != lh.h.n)
    throw std::invalid_argument("fuzzy subset size does not match carrier size");
}
}  // namespace detail

// x ≤ y forces f(x) ≥ f(y).
inline PropertyReport fuzzy_le_antitone(const LeHypergroupoid& lh, const FuzzySubset& f) {
  detail::check_fuzzy(lh, f);
  for (auto [x, y] : lh.le.pairs())
    if (f.grade(x) < f.grade(y))
      return PropertyReport::fail("fuzzy-le-antitone", {"le-antitone", {x, y}, {}});
  return PropertyReport::pass("fuzzy-le-antitone");
}

// u ∈ x∘y forces f(u) ≥ f(y).
inline PropertyReport fuzzy_left_product_bound(const LeHypergroupoid& lh, const FuzzySubset& f) {
  detail::check_fuzzy(lh, f);
  for (int x = 0; x < lh.h.n; ++x)
    for (int y = 0; y < lh.h.n; ++y)
      for (int u : lh.h.entry(x, y))
        if (f.grade(u) < f.grade(y))
          return PropertyReport::fail("fuzzy-left-product-bound", {"left-product", {x, y, u}, {}});
  return PropertyReport::pass("fuzzy-left-product-bound");
}

// u ∈ x∘y forces f(u) ≥ f(x).
inline PropertyReport fuzzy_right_product_bound(const LeHypergroupoid& lh, const FuzzySubset& f) {
  detail::check_fuzzy(lh, f);
  for (int x = 0; x < lh.h.n; ++x)
    for (int y = 0; y < lh.h.n; ++y)
      for (int u : lh.h.entry(x, y))
        if (f.grade(u) < f.grade(x))
          return PropertyReport::fail("fuzzy-right-product-bound", {"right-product", {x, y, u}, {}});
  return PropertyReport::pass("fuzzy-right-product-bound");
}

inline PropertyReport is_fuzzy_left_ideal(const LeHypergroupoid& lh, const FuzzySubset& f) {
  if (auto a = fuzzy_le_antitone(lh, f); !a.holds)
    return PropertyReport::fail("fuzzy-left-ideal", std::move(*a.witness));
  if (auto p = fuzzy_left_product_bound(lh, f); !p.holds)
    return PropertyReport::fail("fuzzy-left-ideal", std::move(*p.witness));
  return PropertyReport::pass("fuzzy-left-ideal");
}

inline PropertyReport is_fuzzy_right_ideal(const LeHypergroupoid& lh, const FuzzySubset& f) {
  if (auto a = fuzzy_le_antitone(lh, f); !a.holds)
    return PropertyReport::fail("fuzzy-right-ideal", std::move(*a.witness));
  if (auto p = fuzzy_right_product_bound(lh, f); !p.holds)
    return PropertyReport::fail("fuzzy-right-ideal", std::move(*p.witness));
  return PropertyReport::pass("fuzzy-right-ideal");
}

inline PropertyReport is_fuzzy_ideal(const LeHypergroupoid& lh, const FuzzySubset& f) {
  if (auto a = fuzzy_le_antitone(lh, f); !a.holds)
    return PropertyReport::fail("fuzzy-ideal", std::move(*a.witness));
  if (auto l = fuzzy_left_product_bound(lh, f); !l.holds)
    return PropertyReport::fail("fuzzy-ideal", std::move(*l.witness));
  if (auto r = fuzzy_right_product_bound(lh, f); !r.holds)
    return PropertyReport::fail("fuzzy-ideal", std::move(*r.witness));
  return PropertyReport::pass("fuzzy-ideal");
}

// One-shot route: f(u) ≥ max{f(x),f(y)} on all u∈x∘y.  Must agree with the
// conjunction of the two product bounds on every input; deliberately skips
// the ≤ condition.
inline PropertyReport fuzzy_ideal_max_oracle(const LeHypergroupoid& lh, const FuzzySubset& f) {
  detail::check_fuzzy(lh, f);
  for (int x = 0; x < lh.h.n; ++x)
    for (int y = 0; y < lh.h.n; ++y) {
      Rational bound = max(f.grade(x), f.grade(y));
      for (int u : lh.h.entry(x, y))
        if (f.grade(u) < bound)
          return PropertyReport::fail("fuzzy-ideal-max", {"max-bound", {x, y, u}, {}});
    }
  return PropertyReport::pass("fuzzy-ideal-max");
}

inline PropertyReport is_fuzzy_prime_subset(const LeHypergroupoid& lh, const FuzzySubset& f) {
  detail::check_fuzzy(lh, f);
  for (int x = 0; x < lh.h.n; ++x)
    for (int y = 0; y < lh.h.n; ++y) {
      Rational bound = max(f.grade(x), f.grade(y));
      for (int u : lh.h.entry(x, y))
        if (f.grade(u) > bound)
          return PropertyReport::fail("fuzzy-prime-subset", {"max-exceeded", {x, y, u}, {}});
    }
  return PropertyReport::pass("fuzzy-prime-subset");
}

// ≤ condition plus exact equality f(u) = max{f(x),f(y)} on all products.
// The equality subsumes both product bounds, so this is one route; fuzzy
// ideal ∧ fuzzy prime subset is the other, and the two must coincide.
inline PropertyReport is_fuzzy_prime_ideal(const LeHypergroupoid& lh, const FuzzySubset& f) {
  if (auto a = fuzzy_le_antitone(lh, f); !a.holds)
    return PropertyReport::fail("fuzzy-prime-ideal", std::move(*a.witness));
  for (int x = 0; x < lh.h.n; ++x)
    for (int y = 0; y < lh.h.n; ++y) {
      Rational bound = max(f.grade(x), f.grade(y));
      for (int u : lh.h.entry(x, y))
        if (f.grade(u) != bound)
          return PropertyReport::fail("fuzzy-prime-ideal", {"max-equality", {x, y, u}, {}});
    }
  return PropertyReport::pass("fuzzy-prime-ideal");
}

// f(x) ≥ f(u) on the diagonal u ∈ x∘x.
inline PropertyReport is_fuzzy_semiprime_subset(const LeHypergroupoid& lh, const FuzzySubset& f) {
  detail::check_fuzzy(lh, f);
  for (int x = 0; x < lh.h.n; ++x)
    for (int u : lh.h.entry(x, x))
      if (f.grade(x) < f.grade(u))
        return PropertyReport::fail("fuzzy-semiprime-subset", {"diagonal-bound", {x, u}, {}});
  return PropertyReport::pass("fuzzy-semiprime-subset");
}

// Fuzzy ideal whose diagonal products carry exactly the grade of their
// base: f(u) = f(x) on u∈x∘x.  For a fuzzy ideal the diagonal already
// satisfies f(u) ≥ f(x), so this coincides with fuzzy ideal ∧ fuzzy
// semiprime subset; both routes are checked against each other in tests.
inline PropertyReport is_fuzzy_semiprime_ideal(const LeHypergroupoid& lh, const FuzzySubset& f) {
  if (auto a = fuzzy_le_antitone(lh, f); !a.holds)
    return PropertyReport::fail("fuzzy-semiprime-ideal", std::move(*a.witness));
  if (auto l = fuzzy_left_product_bound(lh, f); !l.holds)
    return PropertyReport::fail("fuzzy-semiprime-ideal", std::move(*l.witness));
  if (auto r = fuzzy_right_product_bound(lh, f); !r.holds)
    return PropertyReport::fail("fuzzy-semiprime-ideal", std::move(*r.witness));
  for (int x = 0; x < lh.h.n; ++x)
    for (int u : lh.h.entry(x, x))
      if (f.grade(u) != f.grade(x))
        return PropertyReport::fail("fuzzy-semiprime-ideal", {"diagonal-equality", {x, u}, {}});
  return PropertyReport::pass("fuzzy-semiprime-ideal");
}

// Default grade grid for enumerating fuzzy subsets in equivalence runs.
inline std::vector<Rational> default_grade_grid() {
  return {Rational(0, 1), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1, 1)};
}

// Calls fn with every map {0..n-1} → grid, as an odometer with the last
// element moving fastest and grid values in the order given.
template <typename Fn>
void for_each_grid_fuzzy(int n, const std::vector<Rational>& grid, Fn&& fn) {
  if (n < 0 || grid.empty()) throw std::invalid_argument("fuzzy grid enumeration needs n ≥ 0 and a nonempty grid");
  std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
  std::vector<Rational> grades(static_cast<std::size_t>(n), grid[0]);
  for (;;) {
    fn(FuzzySubset(grades));
    int pos = n - 1;
    while (pos >= 0) {
      if (++digits[pos] < grid.size()) {
        grades[pos] = grid[digits[pos]];
        break;
      }
      digits[pos] = 0;
      grades[pos] = grid[0];
      --pos;
    }
    if (pos < 0) return;
  }
}

}  // namespace hyperideal
