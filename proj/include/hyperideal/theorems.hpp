#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperideal/crisp.hpp"
#include "hyperideal/fuzzy.hpp"

// Machine verification of the crisp/fuzzy correspondence laws over finite
// universes of ≤-hypergroupoids, plus counterexample search.
//
// Run ids:
//   P2equiv   left/right ideal deciders agree with their cellwise oracles
//   P7L, P7R  A is a left (right) ideal  ⇔  f_A is a fuzzy left (right) ideal
//   P8        A is an ideal              ⇔  f_A is a fuzzy ideal
//   P10       A is a prime ideal         ⇔  f_A is a fuzzy prime ideal
//   P14fwd    A is a semiprime ideal     ⇔  f_A is a fuzzy semiprime ideal
//   P14conv-literal  search for A with f_A a fuzzy semiprime ideal while A
//                    is NOT a prime ideal (such witnesses exist; the run
//                    collects them)
//   D5equiv   elementwise vs setwise prime factor condition
//   D11equiv  elementwise vs setwise semiprime factor condition
//   FMAXequiv max-bound oracle vs the two product bounds
//   R13       fuzzy ideals dominate their diagonal; every fuzzy prime ideal
//             is a fuzzy semiprime ideal
//
// Every run is deterministic given its universe and seed.

namespace hyperideal {

// Raised when a universe would blow past the configured enumeration caps.
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline FuzzySubset characteristic_function(const LeHypergroupoid& lh, Subset a) {
  std::vector<Rational> grades;
  grades.reserve(static_cast<std::size_t>(lh.h.n));
  for (int x = 0; x < lh.h.n; ++x)
    grades.emplace_back(a.contains(x) ? 1 : 0, 1);
  return FuzzySubset(std::move(grades));
}

// Deterministic RNG: mt19937_64 output with rejection sampling, so the same
// seed reproduces the same structures on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  bool coin() { return eng_() & 1; }
  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = eng_();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::mt19937_64 eng_;
};

inline Subset random_nonempty_subset(int n, Rng& rng) {
  const std::uint64_t full = Subset::full(n).bits();
  return Subset::from_bits(rng.below(full) + 1);
}

// Cells drawn first (row-major, uniform over nonempty subsets), then every
// relation pair kept with probability 1/2, row-major.  The draw order is
// part of the reproducibility contract.
inline LeHypergroupoid random_structure(int n, Rng& rng, bool identity_relation = false) {
  Hypergroupoid h(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) h.set_entry(a, b, random_nonempty_subset(n, rng));
  Relation le;
  if (identity_relation) {
    le = Relation::identity(n);
  } else {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (rng.coin()) le.add(x, y);
  }
  return {std::move(h), std::move(le)};
}

// Which structures a verification run ranges over.  Exhaustive mode covers
// every table (each cell any nonempty subset) × every relation; order 3 is
// only allowed with the identity-relation restriction, order 4+ not at all.
struct Universe {
  enum class Mode { exhaustive, random, single };

  Mode mode = Mode::exhaustive;
  int order = 2;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool identity_relation_only = false;
  std::vector<Rational> grade_grid;  // fuzzy runs; empty means default
  int max_witnesses = 10;
  std::optional<LeHypergroupoid> fixed;  // single mode
  std::string label;                     // single mode: source name for reports

  static Universe exhaustive(int order, bool identity_relation_only = false) {
    Universe u;
    u.mode = Mode::exhaustive;
    u.order = order;
    u.identity_relation_only = identity_relation_only;
    return u;
  }
  static Universe random(int order, std::uint64_t samples, std::uint64_t seed) {
    Universe u;
    u.mode = Mode::random;
    u.order = order;
    u.samples = samples;
    u.seed = seed;
    return u;
  }
  static Universe single(LeHypergroupoid lh, std::string label) {
    Universe u;
    u.mode = Mode::single;
    u.order = lh.h.n;
    u.fixed = std::move(lh);
    u.label = std::move(label);
    return u;
  }
};

// Pump-style producer of the universe's structures.  Exhaustive mode is an
// odometer over the n² table cells (last cell fastest, cell values running
// through the nonempty masks 1..2ⁿ−1) with the relation mask cycling
// innermost; it hits every structure exactly once.
class StructureIterator {
 public:
  explicit StructureIterator(const Universe& u) : u_(u) {
    if (u_.order < 1) throw std::invalid_argument("universe order must be at least 1");
    switch (u_.mode) {
      case Universe::Mode::exhaustive: {
        if (u_.order > 3)
          throw cap_error("exhaustive enumeration is capped at order 3 (identity relation only)");
        if (u_.order == 3 && !u_.identity_relation_only)
          throw cap_error("exhaustive enumeration at order 3 requires the identity-relation-only restriction");
        cells_.assign(static_cast<std::size_t>(u_.order) * u_.order, 1);
        relation_mask_ = 0;
        break;
      }
      case Universe::Mode::random:
        rng_.emplace(u_.seed);
        remaining_ = u_.samples;
        break;
      case Universe::Mode::single:
        if (!u_.fixed) throw std::invalid_argument("single-structure universe without a structure");
        break;
    }
  }

  std::uint64_t position() const { return produced_; }

  std::optional<LeHypergroupoid> next() {
    switch (u_.mode) {
      case Universe::Mode::exhaustive:
        return next_exhaustive();
      case Universe::Mode::random:
        if (remaining_ == 0) return std::nullopt;
        --remaining_;
        ++produced_;
        return random_structure(u_.order, *rng_, u_.identity_relation_only);
      case Universe::Mode::single:
        if (produced_ > 0) return std::nullopt;
        ++produced_;
        return *u_.fixed;
    }
    return std::nullopt;
  }

 private:
  std::optional<LeHypergroupoid> next_exhaustive() {
    if (done_) return std::nullopt;
    const int n = u_.order;
    Hypergroupoid h(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        h.set_entry(a, b, Subset::from_bits(cells_[static_cast<std::size_t>(a) * n + b]));
    Relation le;
    if (u_.identity_relation_only) {
      le = Relation::identity(n);
    } else {
      for (int k = 0; k < n * n; ++k)
        if ((relation_mask_ >> k) & 1) le.add(k / n, k % n);
    }
    advance();
    ++produced_;
    return LeHypergroupoid{std::move(h), std::move(le)};
  }

  void advance() {
    const int n = u_.order;
    if (!u_.identity_relation_only) {
      const std::uint64_t relation_count = std::uint64_t{1} << (n * n);
      if (++relation_mask_ < relation_count) return;
      relation_mask_ = 0;
    }
    const std::uint64_t cell_full = Subset::full(n).bits();
    int pos = n * n - 1;
    while (pos >= 0) {
      if (++cells_[static_cast<std::size_t>(pos)] <= cell_full) return;
      cells_[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    done_ = true;
  }

  Universe u_;
  std::vector<std::uint64_t> cells_;
  std::uint64_t relation_mask_ = 0;
  bool done_ = false;
  std::optional<Rng> rng_;
  std::uint64_t remaining_ = 0;
  std::uint64_t produced_ = 0;
};

// One counterexample found by a run: the structure it lives on, the subset
// and/or fuzzy subset involved, and a short account of the disagreement.
struct FailureRecord {
  LeHypergroupoid structure;
  std::optional<Subset> subset;
  std::optional<FuzzySubset> grades;
  std::string detail;
};

// Outcome of checking one law over one universe.  failures is empty exactly
// when the law held everywhere; the recorded witnesses cap at max_witnesses
// while violations keeps the full count.
struct VerificationRun {
  std::string theorem_id;
  Universe universe;
  std::uint64_t structures_checked = 0;
  std::uint64_t violations = 0;  // total seen, even past the witness cap
  std::vector<FailureRecord> failures;

  bool clean() const { return violations == 0; }
};

namespace detail {

inline void add_failure(VerificationRun& run, const LeHypergroupoid& lh,
                        std::optional<Subset> subset, std::optional<FuzzySubset> grades,
                        std::string detail) {
  ++run.violations;
  const std::size_t cap = run.universe.max_witnesses < 1
                              ? 1
                              : static_cast<std::size_t>(run.universe.max_witnesses);
  if (run.failures.size() < cap)
    run.failures.push_back({lh, std::move(subset), std::move(grades), std::move(detail)});
}

template <typename Check>
VerificationRun run_over_universe(std::string theorem_id, const Universe& u, Check&& check) {
  VerificationRun run;
  run.theorem_id = std::move(theorem_id);
  run.universe = u;
  StructureIterator it(run.universe);
  while (auto lh = it.next()) {
    check(*lh, run);
    ++run.structures_checked;
  }
  return run;
}

inline const char* verdict(bool b) { return b ? "true" : "false"; }

// check over every nonempty subset of the carrier
template <typename Fn>
void for_each_nonempty_subset(int n, Fn&& fn) {
  const std::uint64_t full = Subset::full(n).bits();
  for (std::uint64_t m = 1; m <= full; ++m) fn(Subset::from_bits(m));
}

inline std::vector<Rational> effective_grid(const Universe& u) {
  return u.grade_grid.empty() ? default_grade_grid() : u.grade_grid;
}

}  // namespace detail

inline VerificationRun verify_prop7_left(const Universe& u) {
  return detail::run_over_universe("P7L", u, [](const LeHypergroupoid& lh, VerificationRun& run) {
    detail::for_each_nonempty_subset(lh.h.n, [&](Subset a) {
      bool crisp = is_left_ideal(lh, a).holds;
      bool fuzzy = is_fuzzy_left_ideal(lh, characteristic_function(lh, a)).holds;
      if (crisp != fuzzy)
        detail::add_failure(run, lh, a, std::nullopt,
                            std::string("left-ideal=") + detail::verdict(crisp) +
                                " fuzzy-left-ideal=" + detail::verdict(fuzzy));
    });
  });
}

inline VerificationRun verify_prop7_right(const Universe& u) {
  return detail::run_over_universe("P7R", u, [](const LeHypergroupoid& lh, VerificationRun& run) {
    detail::for_each_nonempty_subset(lh.h.n, [&](Subset a) {
      bool crisp = is_right_ideal(lh, a).holds;
      bool fuzzy = is_fuzzy_right_ideal(lh, characteristic_function(lh, a)).holds;
      if (crisp != fuzzy)
        detail::add_failure(run, lh, a, std::nullopt,
                            std::string("right-ideal=") + detail::verdict(crisp) +
                                " fuzzy-right-ideal=" + detail::verdict(fuzzy));
    });
  });
}

// Both sides of the left/right correspondence.
inline std::vector<VerificationRun> verify_prop7(const Universe& u) {
  return {verify_prop7_left(u), verify_prop7_right(u)};
}

inline VerificationRun verify_prop8(const Universe& u) {
  return detail::run_over_universe("P8", u, [](const LeHypergroupoid& lh, VerificationRun& run) {
    detail::for_each_nonempty_subset(lh.h.n, [&](Subset a) {
      bool crisp = is_ideal(lh, a).holds;
      bool fuzzy = is_fuzzy_ideal(lh, characteristic_function(lh, a)).holds;
      if (crisp != fuzzy)
        detail::add_failure(run, lh, a, std::nullopt,
                            std::string("ideal=") + detail::verdict(crisp) +
                                " fuzzy-ideal=" + detail::verdict(fuzzy));
    });
  });
}

inline VerificationRun verify_prop10(const Universe& u) {
  return detail::run_over_universe("P10", u, [](const LeHypergroupoid& lh, VerificationRun& run) {
    detail::for_each_nonempty_subset(lh.h.n, [&](Subset a) {
      bool crisp = is_prime_ideal(lh, a).holds;
      bool fuzzy = is_fuzzy_prime_ideal(lh, characteristic_function(lh, a)).holds;
      if (crisp != fuzzy)
        detail::add_failure(run, lh, a, std::nullopt,
                            std::string("prime-ideal=") + detail::verdict(crisp) +
                                " fuzzy-prime-ideal=" + detail::verdict(fuzzy));
    });
  });
}

// Semiprime correspondence, both directions: A is a semiprime ideal iff f_A
// is a fuzzy semiprime ideal.
inline VerificationRun verify_prop14_forward(const Universe& u) {
  return detail::run_over_universe("P14fwd", u, [](const LeHypergroupoid& lh, VerificationRun& run) {
    detail::for_each_nonempty_subset(lh.h.n, [&](Subset a) {
      bool crisp = is_semiprime_ideal(lh, a).holds;
      bool fuzzy = is_fuzzy_semiprime_ideal(lh, characteristic_function(lh, a)).holds;
      if (crisp != fuzzy)
        detail::add_failure(run, lh, a, std::nullopt,
                            std::string("semiprime-ideal=") + detail::verdict(crisp) +
                                " fuzzy-semiprime-ideal=" + detail::verdict(fuzzy));
    });
  });
}

// Hunts for subsets whose characteristic function is a fuzzy semiprime
// ideal while the subset is not a prime ideal.  Witnesses land in failures;
// a nonempty result falsifies the claim that fuzzy semiprime ideals force
// prime ideals.
inline VerificationRun search_prop14_literal_counterexample(const Universe& u) {
  return detail::run_over_universe("P14conv-literal", u,
                                   [](const LeHypergroupoid& lh, VerificationRun& run) {
    detail::for_each_nonempty_subset(lh.h.n, [&](Subset a) {
      if (is_fuzzy_semiprime_ideal(lh, characteristic_function(lh, a)).holds &&
          !is_prime_ideal(lh, a).holds)
        detail::add_failure(run, lh, a, std::nullopt,
                            "fuzzy-semiprime-ideal=true prime-ideal=false");
    });
  });
}

inline VerificationRun verify_prop2_equivalence(const Universe& u) {
  return detail::run_over_universe("P2equiv", u, [](const LeHypergroupoid& lh, VerificationRun& run) {
    detail::for_each_nonempty_subset(lh.h.n, [&](Subset a) {
      bool left = is_left_ideal(lh, a).holds;
      bool left_cellwise = elementwise_left_ideal_oracle(lh, a).holds;
      if (left != left_cellwise)
        detail::add_failure(run, lh, a, std::nullopt,
                            std::string("left-ideal=") + detail::verdict(left) +
                                " cellwise=" + detail::verdict(left_cellwise));
      bool right = is_right_ideal(lh, a).holds;
      bool right_cellwise = elementwise_right_ideal_oracle(lh, a).holds;
      if (right != right_cellwise)
        detail::add_failure(run, lh, a, std::nullopt,
                            std::string("right-ideal=") + detail::verdict(right) +
                                " cellwise=" + detail::verdict(right_cellwise));
    });
  });
}

inline VerificationRun verify_def5_equivalence(const Universe& u) {
  return detail::run_over_universe("D5equiv", u, [](const LeHypergroupoid& lh, VerificationRun& run) {
    detail::for_each_nonempty_subset(lh.h.n, [&](Subset i) {
      bool elementwise = prime_factor_membership(lh, i).holds;
      bool setwise = setwise_prime_oracle(lh, i).holds;
      if (elementwise != setwise)
        detail::add_failure(run, lh, i, std::nullopt,
                            std::string("elementwise=") + detail::verdict(elementwise) +
                                " setwise=" + detail::verdict(setwise));
    });
  });
}

inline VerificationRun verify_def11_equivalence(const Universe& u) {
  return detail::run_over_universe("D11equiv", u, [](const LeHypergroupoid& lh, VerificationRun& run) {
    detail::for_each_nonempty_subset(lh.h.n, [&](Subset i) {
      bool elementwise = semiprime_factor_membership(lh, i).holds;
      bool setwise = setwise_semiprime_oracle(lh, i).holds;
      if (elementwise != setwise)
        detail::add_failure(run, lh, i, std::nullopt,
                            std::string("elementwise=") + detail::verdict(elementwise) +
                                " setwise=" + detail::verdict(setwise));
    });
  });
}

inline VerificationRun verify_fuzzy_max_equivalence(const Universe& u) {
  Universe eff = u;
  eff.grade_grid = detail::effective_grid(u);
  return detail::run_over_universe("FMAXequiv", eff, [&eff](const LeHypergroupoid& lh, VerificationRun& run) {
    for_each_grid_fuzzy(lh.h.n, eff.grade_grid, [&](const FuzzySubset& f) {
      bool oracle = fuzzy_ideal_max_oracle(lh, f).holds;
      bool bounds = fuzzy_left_product_bound(lh, f).holds && fuzzy_right_product_bound(lh, f).holds;
      if (oracle != bounds)
        detail::add_failure(run, lh, std::nullopt, f,
                            std::string("max-oracle=") + detail::verdict(oracle) +
                                " product-bounds=" + detail::verdict(bounds));
    });
  });
}

inline VerificationRun verify_remark13(const Universe& u) {
  Universe eff = u;
  eff.grade_grid = detail::effective_grid(u);
  return detail::run_over_universe("R13", eff, [&eff](const LeHypergroupoid& lh, VerificationRun& run) {
    for_each_grid_fuzzy(lh.h.n, eff.grade_grid, [&](const FuzzySubset& f) {
      if (is_fuzzy_ideal(lh, f).holds) {
        // a fuzzy ideal dominates its diagonal products
        for (int x = 0; x < lh.h.n; ++x)
          for (int v : lh.h.entry(x, x))
            if (f.grade(v) < f.grade(x))
              detail::add_failure(run, lh, std::nullopt, f,
                                  "fuzzy-ideal=true but diagonal grade drops at x=" +
                                      std::to_string(x) + " u=" + std::to_string(v));
      }
      if (is_fuzzy_prime_ideal(lh, f).holds && !is_fuzzy_semiprime_ideal(lh, f).holds)
        detail::add_failure(run, lh, std::nullopt, f,
                            "fuzzy-prime-ideal=true fuzzy-semiprime-ideal=false");
    });
  });
}

// The five oracle-equivalence suites in one call.
inline std::vector<VerificationRun> verify_equivalences(const Universe& u) {
  return {verify_prop2_equivalence(u), verify_def5_equivalence(u), verify_def11_equivalence(u),
          verify_fuzzy_max_equivalence(u), verify_remark13(u)};
}

enum class IdealFilter { left, right, two_sided, prime, semiprime };

// All nonempty subsets passing the filter, in ascending bitmask order.
inline std::vector<Subset> enumerate_ideals(const LeHypergroupoid& lh,
                                            IdealFilter filter = IdealFilter::two_sided,
                                            int max_order = 20) {
  if (lh.h.n > max_order)
    throw cap_error("ideal enumeration is capped at order " + std::to_string(max_order));
  std::vector<Subset> out;
  detail::for_each_nonempty_subset(lh.h.n, [&](Subset a) {
    bool keep = false;
    switch (filter) {
      case IdealFilter::left: keep = is_left_ideal(lh, a).holds; break;
      case IdealFilter::right: keep = is_right_ideal(lh, a).holds; break;
      case IdealFilter::two_sided: keep = is_ideal(lh, a).holds; break;
      case IdealFilter::prime: keep = is_prime_ideal(lh, a).holds; break;
      case IdealFilter::semiprime: keep = is_semiprime_ideal(lh, a).holds; break;
    }
    if (keep) out.push_back(a);
  });
  return out;
}

}  // namespace hyperideal
