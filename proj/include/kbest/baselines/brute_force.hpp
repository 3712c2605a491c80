#pragma once

#include <cstddef>
#include <stdexcept>

#include "kbest/core/solution_set.hpp"
#include "kbest/core/search_space.hpp"

namespace kbest::baselines {

class OracleOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reference enumerator: uniform-cost search over whole paths with no
/// duplicate detection, so every partial path is its own node. Paths reaching
/// the goal are reported and never extended. Before searching, the reachable
/// state set (at most `hard_cap` states) is explored and paths ending in states
/// that cannot reach the goal are pruned, which keeps the enumeration finite
/// whenever fewer than kappa solutions exist.
///
/// Shares nothing with the BELA engine beyond the core types. Throws
/// OracleOverflow when more than `hard_cap` partial paths are generated.
SolutionSet brute_force_k_paths(const SearchSpace& space, std::size_t kappa, std::size_t hard_cap);

/// All solution paths whose cost is among the `levels` cheapest distinct
/// solution costs (levels = 3 enumerates everything up to C*_2).
SolutionSet brute_force_cost_levels(const SearchSpace& space, std::size_t levels,
                                    std::size_t hard_cap);

}  // namespace kbest::baselines
