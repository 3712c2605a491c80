#include "kbest/domains/explicit_graph.hpp"

#include <stdexcept>

#include "kbest/core/errors.hpp"

namespace kbest::domains {

ExplicitGraph::ExplicitGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

const EdgeRef& ExplicitGraph::add_edge(std::uint32_t u, std::uint32_t v, Cost weight) {
  if (u >= vertex_count() || v >= vertex_count())
    throw std::out_of_range("edge endpoint out of range");
  if (weight < 0) throw PreconditionError("negative edge weight");
  std::uint32_t& serial = parallel_[(std::uint64_t{u} << 32) | v];
  EdgeRef e{StateKey(u), StateKey(v), weight, serial++};
  arcs_.push_back(e);
  adjacency_[u].push_back(e);
  return adjacency_[u].back();
}

void ExplicitGraph::set_coords(std::vector<Coord> coords) {
  if (!coords.empty() && coords.size() != vertex_count())
    throw PreconditionError("coordinate count differs from vertex count");
  coords_ = std::move(coords);
}

void ExplicitGraph::set_names(std::vector<std::string> names) {
  if (names.size() != vertex_count()) throw PreconditionError("name count differs from vertex count");
  name_index_.clear();
  for (std::uint32_t i = 0; i < names.size(); ++i)
    if (!name_index_.emplace(names[i], i).second)
      throw PreconditionError("duplicate vertex name " + names[i]);
  names_ = std::move(names);
}

std::optional<std::uint32_t> ExplicitGraph::find_name(const std::string& name) const {
  auto it = name_index_.find(name);
  if (it == name_index_.end()) return std::nullopt;
  return it->second;
}

ExplicitGraph ExplicitGraph::with_unit_weights() const {
  ExplicitGraph g(vertex_count());
  for (const EdgeRef& e : arcs_)
    g.add_edge(static_cast<std::uint32_t>(e.source.value()),
               static_cast<std::uint32_t>(e.target.value()), 1);
  if (!names_.empty()) g.set_names(names_);
  return g;
}

GraphSpace::GraphSpace(std::shared_ptr<const ExplicitGraph> graph, std::uint32_t start,
                       std::uint32_t goal, Heuristic heuristic)
    : graph_(std::move(graph)), start_(start), goal_(goal), heuristic_(std::move(heuristic)) {
  if (start_ >= graph_->vertex_count() || goal_ >= graph_->vertex_count())
    throw PreconditionError("start or goal vertex out of range");
}

void GraphSpace::successors(StateKey state, std::vector<EdgeRef>& out) const {
  const auto& adj = graph_->out_edges(static_cast<std::uint32_t>(state.value()));
  out.assign(adj.begin(), adj.end());
}

Cost GraphSpace::heuristic(StateKey state) const {
  return heuristic_ ? heuristic_(static_cast<std::uint32_t>(state.value())) : 0;
}

std::string GraphSpace::render(StateKey state) const {
  if (!graph_->names().empty()) return graph_->names().at(state.value());
  return std::to_string(state.value() + 1);
}

StateKey GraphSpace::parse_state(std::string_view token) const {
  if (!graph_->names().empty()) {
    auto v = graph_->find_name(std::string(token));
    if (!v) throw ParseError("unknown vertex " + std::string(token), 0);
    return StateKey(*v);
  }
  const StateKey one_based = SearchSpace::parse_state(token);
  if (one_based.value() == 0 || one_based.value() > graph_->vertex_count())
    throw ParseError("vertex out of range: " + std::string(token), 0);
  return StateKey(one_based.value() - 1);
}

}  // namespace kbest::domains
