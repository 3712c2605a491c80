#pragma once

#include <string>

#include "kbest/core/solution_set.hpp"

namespace kbest::baselines {

struct EquivalenceReport {
  bool equal = true;
  std::string first_divergence;
};

/// Cost multisets must match exactly. Path sets must match for every cost
/// strictly below the shared worst cost, and entirely when both sets are
/// complete; at the worst cost only the number of paths is compared.
EquivalenceReport verify_equivalence(const SolutionSet& a, const SolutionSet& b);

}  // namespace kbest::baselines
