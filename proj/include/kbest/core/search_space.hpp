#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kbest/core/types.hpp"

namespace kbest {

/// A directed, locally finite, implicitly generated graph with a designated
/// start and goal.
///
/// Implementations must be deterministic: the same state always yields the
/// same successor list in the same order. When a heuristic is offered it must
/// be consistent, h(n) <= w(n, n') + h(n') for every generated edge, with
/// h(goal) = 0. Instances are immutable once built and may be shared across
/// concurrent searches.
class SearchSpace {
 public:
  virtual ~SearchSpace() = default;

  virtual StateKey start() const = 0;
  virtual StateKey goal() const = 0;

  /// Replaces the contents of `out` with the outgoing edges of `state`.
  virtual void successors(StateKey state, std::vector<EdgeRef>& out) const = 0;

  virtual bool has_heuristic() const { return false; }
  virtual Cost heuristic(StateKey) const { return 0; }

  /// Token used by path serialization. Must not contain whitespace.
  virtual std::string render(StateKey state) const { return std::to_string(state.value()); }
  virtual StateKey parse_state(std::string_view token) const;
};

}  // namespace kbest
