#pragma once

#include <cstdint>
#include <string>

#include "kbest/domains/explicit_graph.hpp"

namespace kbest::domains {

inline constexpr double kEarthRadiusMeters = 6371000.0;

/// Great-circle distance in whole meters (floored). Throws std::out_of_range
/// for |lat| > 90 degrees or |lon| > 180 degrees.
std::int64_t haversine_micro(Coord a, Coord b);

/// Rational multiplier applied to haversine meters. num == 0 means the
/// heuristic is disabled.
struct HeuristicScale {
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::string warning;

  bool enabled() const noexcept { return num > 0; }
};

/// Picks the largest ladder rung alpha <= 1 with alpha * (hav(u, v) + 1) <= w
/// for every arc u -> v. The extra meter absorbs the flooring of distances so
/// that h(n) = floor(alpha * hav(n, t)) stays consistent.
HeuristicScale calibrate_heuristic_scale(const ExplicitGraph& graph);

/// floor(scale * hav(v, goal)) as a GraphSpace heuristic; empty when the
/// scale is disabled or the graph has no coordinates.
GraphSpace::Heuristic haversine_heuristic(std::shared_ptr<const ExplicitGraph> graph,
                                          std::uint32_t goal, HeuristicScale scale);

}  // namespace kbest::domains
