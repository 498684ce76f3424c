#pragma once

// Umbrella header for the hyperideal library: finite ≤-hypergroupoids,
// crisp and fuzzy ideal-theoretic deciders, characteristic-function
// correspondence checks, and the lehyper text format.

#include "hyperideal/algebra.hpp"
#include "hyperideal/crisp.hpp"
#include "hyperideal/fuzzy.hpp"
#include "hyperideal/io.hpp"
#include "hyperideal/rational.hpp"
#include "hyperideal/report.hpp"
#include "hyperideal/subset.hpp"
#include "hyperideal/theorems.hpp"
