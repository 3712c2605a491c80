#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kbest/core/search_space.hpp"
#include "kbest/core/types.hpp"

namespace kbest::baselines {

using GStarMap = std::unordered_map<StateKey, Cost>;

/// Plain Dijkstra from the start over at most `cap` states; independent of the
/// BELA ledger. The goal is absorbing, as in every search here: its outgoing
/// edges are never relaxed. Unreached states are absent from the map.
GStarMap dijkstra_gstar(const SearchSpace& space, std::size_t cap);

struct Decomposition {
  Path prefix;
  std::optional<EdgeRef> sidetrack;
  // Empty (no states) when the sidetrack ends at the last state.
  Path suffix;
};

/// Splits `path` at its first edge with g*(target) < g*(source) + w. An
/// optimal path has no sidetrack and is all prefix.
Decomposition first_sidetrack_decomposition(const Path& path, const GStarMap& gstar);

struct CentroidKey {
  EdgeRef edge;
  Cost cost;
  friend auto operator<=>(const CentroidKey&, const CentroidKey&) = default;
};

struct PartitionReport {
  std::size_t optimal_paths = 0;
  std::size_t suboptimal_paths = 0;
  // Path indices grouped by (first sidetrack, cost).
  std::map<CentroidKey, std::vector<std::size_t>> groups;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Groups suboptimal paths by centroid and checks the partition: every
/// suboptimal path has exactly one first sidetrack, optimal paths have none,
/// each path sits in exactly one group, and the group cost matches
/// g*(u) + w(u, v) + (cost of the suffix after the sidetrack).
PartitionReport centroid_partition_check(const std::vector<Path>& paths, const GStarMap& gstar);

/// For every suboptimal path with first sidetrack u -> v, some strictly cheaper
/// path in `paths` must contain v in its prefix. Returns the violations.
std::vector<std::string> adjacent_path_check(const std::vector<Path>& paths, const GStarMap& gstar);

}  // namespace kbest::baselines
