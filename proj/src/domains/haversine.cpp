#include "kbest/domains/haversine.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kbest/core/errors.hpp"

namespace kbest::domains {

std::int64_t haversine_micro(Coord a, Coord b) {
  constexpr std::int64_t kLat = 90'000'000;
  constexpr std::int64_t kLon = 180'000'000;
  if (std::llabs(a.lat) > kLat || std::llabs(b.lat) > kLat)
    throw std::out_of_range("latitude beyond 90 degrees");
  if (std::llabs(a.lon) > kLon || std::llabs(b.lon) > kLon)
    throw std::out_of_range("longitude beyond 180 degrees");
  if (a == b) return 0;
  constexpr double kRad = std::numbers::pi / 180.0 / 1e6;
  const double phi1 = static_cast<double>(a.lat) * kRad;
  const double phi2 = static_cast<double>(b.lat) * kRad;
  const double dphi = static_cast<double>(b.lat - a.lat) * kRad;
  const double dlambda = static_cast<double>(b.lon - a.lon) * kRad;
  const double s1 = std::sin(dphi / 2);
  const double s2 = std::sin(dlambda / 2);
  double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  h = std::min(1.0, std::max(0.0, h));
  return static_cast<std::int64_t>(std::floor(2.0 * kEarthRadiusMeters * std::asin(std::sqrt(h))));
}

HeuristicScale calibrate_heuristic_scale(const ExplicitGraph& graph) {
  if (!graph.has_coords()) throw PreconditionError("graph has no coordinates");
  static constexpr std::array<std::pair<std::int64_t, std::int64_t>, 15> kLadder{{
      {1, 1}, {9, 10}, {4, 5}, {3, 4}, {2, 3}, {1, 2}, {2, 5}, {1, 3},
      {1, 4}, {1, 5}, {1, 10}, {1, 20}, {1, 50}, {1, 100}, {1, 1000},
  }};
  const auto& c = graph.coords();
  // The binding constraint is the arc with the smallest w / (hav + 1).
  std::int64_t worst_w = 1;
  std::int64_t worst_d = 0;
  for (const EdgeRef& e : graph.arcs()) {
    const std::int64_t d = haversine_micro(c[e.source.value()], c[e.target.value()]) + 1;
    // e.weight / d < worst_w / worst_d
    if (worst_d == 0 || static_cast<long double>(e.weight) * worst_d <
                            static_cast<long double>(worst_w) * d) {
      worst_w = e.weight;
      worst_d = d;
    }
  }
  if (worst_d == 0) return HeuristicScale{1, 1, {}};
  for (auto [num, den] : kLadder)
    if (static_cast<long double>(num) * worst_d <= static_cast<long double>(worst_w) * den)
      return HeuristicScale{num, den, {}};
  return HeuristicScale{0, 1,
                        "no heuristic scale on the ladder is consistent with the arc weights; "
                        "falling back to h = 0"};
}

GraphSpace::Heuristic haversine_heuristic(std::shared_ptr<const ExplicitGraph> graph,
                                          std::uint32_t goal, HeuristicScale scale) {
  if (!scale.enabled() || !graph->has_coords()) return {};
  return [graph = std::move(graph), goal, scale](std::uint32_t v) -> Cost {
    const auto& c = graph->coords();
    return haversine_micro(c[v], c[goal]) * scale.num / scale.den;
  };
}

}  // namespace kbest::domains
