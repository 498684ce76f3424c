#pragma once

// Structure builders shared across the test suites.

#include <functional>

#include "hyperideal/hyperideal.hpp"

namespace testutil {

using hyperideal::Hypergroupoid;
using hyperideal::LeHypergroupoid;
using hyperideal::Relation;
using hyperideal::Subset;

// singleton hyperoperation x∘y = {op(x,y)}
inline LeHypergroupoid singleton_table(int n, const std::function<int(int, int)>& op,
                                       Relation le = {}) {
  Hypergroupoid h(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) h.set_entry(a, b, Subset::single(op(a, b)));
  if (le.pairs().empty()) le = Relation::identity(n);
  return {h, le};
}

// multiplication mod 2: 0∘0={0}, 0∘1={0}, 1∘0={0}, 1∘1={1}
inline LeHypergroupoid mult2() {
  return singleton_table(2, [](int a, int b) { return a * b % 2; });
}

// multiplication mod 6
inline LeHypergroupoid z6() {
  return singleton_table(6, [](int a, int b) { return a * b % 6; });
}

// x∘y = {x}
inline LeHypergroupoid first_projection(int n = 2) {
  return singleton_table(n, [](int a, int) { return a; });
}

// x∘y = {y}
inline LeHypergroupoid second_projection(int n = 2) {
  return singleton_table(n, [](int, int b) { return b; });
}

// every cell {c}
inline LeHypergroupoid constant_table(int n, int c) {
  return singleton_table(n, [c](int, int) { return c; });
}

// componentwise multiplication on Z2 × Z6, element (a,b) encoded as a*6+b;
// carries eleven semiprime-but-not-prime ideals, handy for witness-cap tests
inline LeHypergroupoid z2xz6() {
  return singleton_table(12, [](int x, int y) {
    int a = (x / 6) * (y / 6) % 2;
    int b = (x % 6) * (y % 6) % 6;
    return a * 6 + b;
  });
}

}  // namespace testutil
