#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperideal/subset.hpp"

namespace hyperideal {

// Evidence a decider hands back when a property fails: which condition broke
// (kind) and on what tuple.  Element tuples follow the decider's documented
// scan order; setwise oracles report the offending subsets instead.
struct Witness {
  std::string kind;
  std::vector<int> elements;
  std::vector<Subset> subsets;
};

// Verdict of a property decider.  A witness is attached exactly when the
// property fails; construct through pass()/fail() to keep that invariant.
struct PropertyReport {
  std::string property;
  bool holds = true;
  std::optional<Witness> witness;

  static PropertyReport pass(std::string property) {
    return {std::move(property), true, std::nullopt};
  }
  static PropertyReport fail(std::string property, Witness w) {
    return {std::move(property), false, std::move(w)};
  }
};

}  // namespace hyperideal
