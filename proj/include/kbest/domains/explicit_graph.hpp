#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kbest/core/search_space.hpp"

namespace kbest::domains {

/// Latitude/longitude in micro-degrees.
struct Coord {
  std::int64_t lat = 0;
  std::int64_t lon = 0;
  friend bool operator==(const Coord&, const Coord&) = default;
};

/// Directed multigraph with vertices 0..n-1. Adjacency lists keep insertion
/// order; parallel edges get increasing serials per (source, target) pair.
class ExplicitGraph {
 public:
  explicit ExplicitGraph(std::size_t vertex_count = 0);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return arcs_.size(); }

  const EdgeRef& add_edge(std::uint32_t u, std::uint32_t v, Cost weight);
  const std::vector<EdgeRef>& out_edges(std::uint32_t u) const { return adjacency_.at(u); }
  // Every arc in insertion order.
  const std::vector<EdgeRef>& arcs() const noexcept { return arcs_; }

  bool has_coords() const noexcept { return !coords_.empty(); }
  const std::vector<Coord>& coords() const noexcept { return coords_; }
  void set_coords(std::vector<Coord> coords);

  // Optional display names, used by render/parse of GraphSpace.
  void set_names(std::vector<std::string> names);
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::uint32_t> find_name(const std::string& name) const;

  /// Same topology with every weight replaced by 1; coordinates are dropped.
  ExplicitGraph with_unit_weights() const;

  // Comment lines of the source files and the record index each preceded,
  // kept so that emitting a parsed file reproduces it.
  std::vector<std::pair<std::size_t, std::string>> gr_comments;
  std::vector<std::pair<std::size_t, std::string>> co_comments;

 private:
  std::vector<std::vector<EdgeRef>> adjacency_;
  std::vector<EdgeRef> arcs_;
  std::unordered_map<std::uint64_t, std::uint32_t> parallel_;
  std::vector<Coord> coords_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> name_index_;
};

/// Start/goal search problem over an ExplicitGraph. The heuristic, when given,
/// maps a vertex to its estimate.
class GraphSpace : public SearchSpace {
 public:
  using Heuristic = std::function<Cost(std::uint32_t)>;

  GraphSpace(std::shared_ptr<const ExplicitGraph> graph, std::uint32_t start, std::uint32_t goal,
             Heuristic heuristic = {});

  StateKey start() const override { return StateKey(start_); }
  StateKey goal() const override { return StateKey(goal_); }
  void successors(StateKey state, std::vector<EdgeRef>& out) const override;
  bool has_heuristic() const override { return static_cast<bool>(heuristic_); }
  Cost heuristic(StateKey state) const override;
  std::string render(StateKey state) const override;
  StateKey parse_state(std::string_view token) const override;

  const ExplicitGraph& graph() const noexcept { return *graph_; }

 private:
  std::shared_ptr<const ExplicitGraph> graph_;
  std::uint32_t start_;
  std::uint32_t goal_;
  Heuristic heuristic_;
};

}  // namespace kbest::domains
