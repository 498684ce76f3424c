#pragma once

#include <optional>
#include <string>

#include "hyperideal/algebra.hpp"
#include "hyperideal/report.hpp"

// Crisp (two-valued) deciders for subsets of a ≤-hypergroupoid:
//
//   subgroupoid      A*A ⊆ A
//   left ideal       H*A ⊆ A   and A downward closed under ≤
//   right ideal      A*H ⊆ A   and A downward closed under ≤
//   ideal            both
//   prime subset     a∘b ⊆ I forces a∈I or b∈I, and every a∘b is either
//                    contained in I or disjoint from I
//   semiprime subset the same two conditions restricted to a∘a
//
// Prime/semiprime *ideals* add the ideal conditions; bare prime/semiprime
// *subsets* say nothing about ≤.  Every decider reports the first violating
// tuple in lexicographic element order, scanning one condition completely
// before the next, so witnesses are deterministic.

namespace hyperideal {

namespace detail {

// Downward closure: a∈A and b ≤ a force b∈A.  Witness is the first (a,b)
// violating pair, a ascending then b.
inline std::optional<Witness> le_closure_violation(const LeHypergroupoid& lh, Subset a) {
  for (int x : a)
    for (int b = 0; b < lh.h.n; ++b)
      if (lh.le.contains(b, x) && !a.contains(b)) return Witness{"le-closure", {x, b}, {}};
  return std::nullopt;
}

}  // namespace detail

inline PropertyReport is_subgroupoid(const LeHypergroupoid& lh, Subset a) {
  detail::check_operand(lh.h, a, "subgroupoid check");
  Subset escaped = subset_product(lh.h, a, a) - a;
  if (!escaped.is_empty())
    return PropertyReport::fail("subgroupoid", {"product-escape", {*escaped.begin()}, {}});
  return PropertyReport::pass("subgroupoid");
}

inline PropertyReport is_left_ideal(const LeHypergroupoid& lh, Subset a) {
  detail::check_operand(lh.h, a, "left ideal check");
  const Hypergroupoid& h = lh.h;
  if (!subset_product(h, Subset::full(h.n), a).subset_of(a)) {
    // locate the first escaping (h, a, u) triple
    for (int hh = 0; hh < h.n; ++hh)
      for (int x : a)
        for (int u : h.entry(hh, x))
          if (!a.contains(u))
            return PropertyReport::fail("left-ideal", {"left-product", {hh, x, u}, {}});
  }
  if (auto w = detail::le_closure_violation(lh, a))
    return PropertyReport::fail("left-ideal", std::move(*w));
  return PropertyReport::pass("left-ideal");
}

inline PropertyReport is_right_ideal(const LeHypergroupoid& lh, Subset a) {
  detail::check_operand(lh.h, a, "right ideal check");
  const Hypergroupoid& h = lh.h;
  if (!subset_product(h, a, Subset::full(h.n)).subset_of(a)) {
    for (int x : a)
      for (int hh = 0; hh < h.n; ++hh)
        for (int u : h.entry(x, hh))
          if (!a.contains(u))
            return PropertyReport::fail("right-ideal", {"right-product", {x, hh, u}, {}});
  }
  if (auto w = detail::le_closure_violation(lh, a))
    return PropertyReport::fail("right-ideal", std::move(*w));
  return PropertyReport::pass("right-ideal");
}

inline PropertyReport is_ideal(const LeHypergroupoid& lh, Subset a) {
  if (auto left = is_left_ideal(lh, a); !left.holds)
    return PropertyReport::fail("ideal", std::move(*left.witness));
  if (auto right = is_right_ideal(lh, a); !right.holds)
    return PropertyReport::fail("ideal", std::move(*right.witness));
  return PropertyReport::pass("ideal");
}

// Left-ideal oracle that never builds the union H*A: it checks h∘a ⊆ A cell
// by cell (plus downward closure, so it decides the same property as
// is_left_ideal).  The two routes must agree on every input.
inline PropertyReport elementwise_left_ideal_oracle(const LeHypergroupoid& lh, Subset a) {
  detail::check_operand(lh.h, a, "left ideal oracle");
  for (int hh = 0; hh < lh.h.n; ++hh)
    for (int x : a) {
      Subset escaped = lh.h.entry(hh, x) - a;
      if (!escaped.is_empty())
        return PropertyReport::fail("left-ideal-elementwise",
                                    {"left-product", {hh, x, *escaped.begin()}, {}});
    }
  if (auto w = detail::le_closure_violation(lh, a))
    return PropertyReport::fail("left-ideal-elementwise", std::move(*w));
  return PropertyReport::pass("left-ideal-elementwise");
}

inline PropertyReport elementwise_right_ideal_oracle(const LeHypergroupoid& lh, Subset a) {
  detail::check_operand(lh.h, a, "right ideal oracle");
  for (int x : a)
    for (int hh = 0; hh < lh.h.n; ++hh) {
      Subset escaped = lh.h.entry(x, hh) - a;
      if (!escaped.is_empty())
        return PropertyReport::fail("right-ideal-elementwise",
                                    {"right-product", {x, hh, *escaped.begin()}, {}});
    }
  if (auto w = detail::le_closure_violation(lh, a))
    return PropertyReport::fail("right-ideal-elementwise", std::move(*w));
  return PropertyReport::pass("right-ideal-elementwise");
}

// a∘b ⊆ I forces a ∈ I or b ∈ I.
inline PropertyReport prime_factor_membership(const LeHypergroupoid& lh, Subset i) {
  detail::check_operand(lh.h, i, "prime check");
  for (int a = 0; a < lh.h.n; ++a)
    for (int b = 0; b < lh.h.n; ++b)
      if (lh.h.entry(a, b).subset_of(i) && !i.contains(a) && !i.contains(b))
        return PropertyReport::fail("prime-factor-membership", {"factors-outside", {a, b}, {}});
  return PropertyReport::pass("prime-factor-membership");
}

// Every a∘b is contained in I or disjoint from I; a cell straddling the
// boundary violates it.
inline PropertyReport prime_contained_or_disjoint(const LeHypergroupoid& lh, Subset i) {
  detail::check_operand(lh.h, i, "prime check");
  for (int a = 0; a < lh.h.n; ++a)
    for (int b = 0; b < lh.h.n; ++b) {
      Subset cell = lh.h.entry(a, b);
      if (!cell.subset_of(i) && cell.intersects(i))
        return PropertyReport::fail("prime-contained-or-disjoint", {"partial-overlap", {a, b}, {}});
    }
  return PropertyReport::pass("prime-contained-or-disjoint");
}

inline PropertyReport is_prime_subset(const LeHypergroupoid& lh, Subset i) {
  if (auto c1 = prime_factor_membership(lh, i); !c1.holds)
    return PropertyReport::fail("prime-subset", std::move(*c1.witness));
  if (auto c2 = prime_contained_or_disjoint(lh, i); !c2.holds)
    return PropertyReport::fail("prime-subset", std::move(*c2.witness));
  return PropertyReport::pass("prime-subset");
}

// Setwise form of the factor condition: A*B ⊆ I forces A ⊆ I or B ⊆ I, over
// all pairs of nonempty subsets.  Equivalent to prime_factor_membership;
// exists as the brute-force side of that equivalence.
inline PropertyReport setwise_prime_oracle(const LeHypergroupoid& lh, Subset i) {
  detail::check_operand(lh.h, i, "setwise prime oracle");
  const std::uint64_t full = Subset::full(lh.h.n).bits();
  for (std::uint64_t ma = 1; ma <= full; ++ma)
    for (std::uint64_t mb = 1; mb <= full; ++mb) {
      Subset a = Subset::from_bits(ma), b = Subset::from_bits(mb);
      if (subset_product(lh.h, a, b).subset_of(i) && !a.subset_of(i) && !b.subset_of(i))
        return PropertyReport::fail("prime-subset-setwise", {"setwise-factors-outside", {}, {a, b}});
    }
  return PropertyReport::pass("prime-subset-setwise");
}

inline PropertyReport is_prime_ideal(const LeHypergroupoid& lh, Subset i) {
  if (auto ideal = is_ideal(lh, i); !ideal.holds)
    return PropertyReport::fail("prime-ideal", std::move(*ideal.witness));
  if (auto prime = is_prime_subset(lh, i); !prime.holds)
    return PropertyReport::fail("prime-ideal", std::move(*prime.witness));
  return PropertyReport::pass("prime-ideal");
}

// Diagonal restrictions of the two prime conditions.
inline PropertyReport semiprime_factor_membership(const LeHypergroupoid& lh, Subset i) {
  detail::check_operand(lh.h, i, "semiprime check");
  for (int a = 0; a < lh.h.n; ++a)
    if (lh.h.entry(a, a).subset_of(i) && !i.contains(a))
      return PropertyReport::fail("semiprime-factor-membership", {"factors-outside", {a}, {}});
  return PropertyReport::pass("semiprime-factor-membership");
}

inline PropertyReport semiprime_contained_or_disjoint(const LeHypergroupoid& lh, Subset i) {
  detail::check_operand(lh.h, i, "semiprime check");
  for (int a = 0; a < lh.h.n; ++a) {
    Subset cell = lh.h.entry(a, a);
    if (!cell.subset_of(i) && cell.intersects(i))
      return PropertyReport::fail("semiprime-contained-or-disjoint", {"partial-overlap", {a}, {}});
  }
  return PropertyReport::pass("semiprime-contained-or-disjoint");
}

inline PropertyReport is_semiprime_subset(const LeHypergroupoid& lh, Subset i) {
  if (auto c1 = semiprime_factor_membership(lh, i); !c1.holds)
    return PropertyReport::fail("semiprime-subset", std::move(*c1.witness));
  if (auto c2 = semiprime_contained_or_disjoint(lh, i); !c2.holds)
    return PropertyReport::fail("semiprime-subset", std::move(*c2.witness));
  return PropertyReport::pass("semiprime-subset");
}

// A*A ⊆ I forces A ⊆ I, over all nonempty A; the brute-force side of the
// semiprime factor-condition equivalence.
inline PropertyReport setwise_semiprime_oracle(const LeHypergroupoid& lh, Subset i) {
  detail::check_operand(lh.h, i, "setwise semiprime oracle");
  const std::uint64_t full = Subset::full(lh.h.n).bits();
  for (std::uint64_t ma = 1; ma <= full; ++ma) {
    Subset a = Subset::from_bits(ma);
    if (subset_product(lh.h, a, a).subset_of(i) && !a.subset_of(i))
      return PropertyReport::fail("semiprime-subset-setwise", {"setwise-factors-outside", {}, {a}});
  }
  return PropertyReport::pass("semiprime-subset-setwise");
}

inline PropertyReport is_semiprime_ideal(const LeHypergroupoid& lh, Subset i) {
  if (auto ideal = is_ideal(lh, i); !ideal.holds)
    return PropertyReport::fail("semiprime-ideal", std::move(*ideal.witness));
  if (auto semi = is_semiprime_subset(lh, i); !semi.holds)
    return PropertyReport::fail("semiprime-ideal", std::move(*semi.witness));
  return PropertyReport::pass("semiprime-ideal");
}

}  // namespace hyperideal
