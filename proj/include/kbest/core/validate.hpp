#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kbest/core/search_space.hpp"

namespace kbest {

struct ValidationReport {
  std::size_t states_sampled = 0;
  std::size_t edges_checked = 0;
  std::vector<EdgeRef> negative_edges;
  // Edges n -> n' with h(n) > w + h(n').
  std::vector<EdgeRef> inconsistent_edges;
  bool goal_heuristic_nonzero = false;
  bool zero_weight_cycle = false;

  bool consistent() const {
    return inconsistent_edges.empty() && !goal_heuristic_nonzero;
  }
  bool ok() const { return consistent() && negative_edges.empty(); }
  std::string summary() const;
};

/// Breadth-first sample of up to `sample` states from the start, checking
/// edge weights, heuristic consistency on every sampled edge, h(goal) = 0, and
/// zero-weight cycles among the sampled states. Report only; never throws.
ValidationReport validate_search_space(const SearchSpace& space, std::size_t sample);

}  // namespace kbest
