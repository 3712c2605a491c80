#pragma once

#include <cstddef>

#include "kbest/core/result.hpp"
#include "kbest/core/search_space.hpp"

namespace kbest::baselines {

struct MSearchOptions {
  std::size_t kappa = 1;
  // false: mDijkstra. true: mA*.
  bool use_heuristic = false;
  SearchLimits limits;
};

/// Best-first search in which every node is a path: a state may be expanded
/// up to kappa times, and each pop of the goal yields one solution path by
/// chaining parents. Stops after kappa goal pops or when OPEN empties.
///
/// Children of a state that has already used up its kappa expansions are not
/// inserted into OPEN; they would only be popped and discarded.
SearchResult m_search(const SearchSpace& space, const MSearchOptions& options);

}  // namespace kbest::baselines
