#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "kbest/core/types.hpp"

namespace kbest::bela {

/// Everything known about one expanded state.
struct ClosedEntry {
  StateKey state;
  // Optimal cost from the start, fixed when the state is first expanded.
  Cost g_star = 0;
  // Every recorded edge into this state: the tree edge of the expansion
  // parent first, then the via-edges of later duplicate pops.
  std::vector<EdgeRef> incoming;
  // Known backward costs to the goal, kept sorted and unique.
  std::vector<Cost> gb_values;

  bool has_gb(Cost gb) const;
  /// Returns false when `gb` was already present.
  bool insert_gb(Cost gb);
};

/// The closed list: g*-values, every traversed edge, and the backward costs
/// discovered by path reconstruction.
class ClosedLedger {
 public:
  bool contains(StateKey s) const { return index_.count(s) != 0; }

  /// Closes `s` with its optimal cost. Throws InvariantError if already closed.
  ClosedEntry& close(StateKey s, Cost g_star);

  ClosedEntry* find(StateKey s);
  const ClosedEntry* find(StateKey s) const;

  /// Throws PreconditionError naming the state when it is not closed.
  ClosedEntry& at(StateKey s);
  const ClosedEntry& at(StateKey s) const;

  /// True iff g*(target) < g*(source) + w. Both endpoints must be closed.
  bool is_sidetrack(const EdgeRef& e) const;

  std::size_t size() const { return entries_.size(); }
  std::uint64_t edges_recorded() const { return edges_recorded_; }
  void note_edge_recorded() { ++edges_recorded_; }

 private:
  std::unordered_map<StateKey, std::uint32_t> index_;
  std::vector<ClosedEntry> entries_;
  std::uint64_t edges_recorded_ = 0;
};

}  // namespace kbest::bela
