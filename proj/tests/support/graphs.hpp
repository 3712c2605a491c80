#pragma once

#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kbest/domains/explicit_graph.hpp"
#include "kbest/domains/grid.hpp"
#include "kbest/domains/instances.hpp"

namespace testsupport {

using kbest::Cost;
using kbest::EdgeRef;
using kbest::StateKey;
using kbest::domains::ExplicitGraph;
using kbest::domains::GraphSpace;

struct NamedArc {
  const char* from;
  const char* to;
  Cost weight;
};

inline std::shared_ptr<ExplicitGraph> named_graph(const std::vector<std::string>& names,
                                                  const std::vector<NamedArc>& arcs) {
  auto g = std::make_shared<ExplicitGraph>(names.size());
  g->set_names(names);
  for (const auto& a : arcs) g->add_edge(*g->find_name(a.from), *g->find_name(a.to), a.weight);
  return g;
}

inline std::shared_ptr<ExplicitGraph> example_graph() {
  return named_graph({"s0", "s1", "s2", "s3", "s4"},
                     {{"s0", "s1", 3}, {"s0", "s2", 2}, {"s1", "s2", 1}, {"s1", "s4", 1},
                      {"s1", "s1", 2}, {"s2", "s3", 1}, {"s2", "s4", 3}, {"s3", "s2", 2}});
}

inline std::shared_ptr<ExplicitGraph> chain_graph() {
  return named_graph({"s", "A", "B", "C", "D", "t", "E", "F"},
                     {{"s", "A", 1}, {"A", "B", 2}, {"B", "C", 4}, {"C", "D", 1}, {"D", "t", 2},
                      {"A", "E", 1}, {"E", "B", 2}, {"C", "F", 2}, {"F", "D", 1}});
}

inline std::shared_ptr<ExplicitGraph> sidetrack_graph() {
  return named_graph({"s", "A", "B", "C", "D", "E", "t"},
                     {{"s", "A", 1}, {"A", "B", 2}, {"B", "t", 1}, {"s", "C", 3}, {"C", "B", 2},
                      {"s", "D", 3}, {"D", "E", 2}, {"E", "t", 2}});
}

inline GraphSpace named_space(std::shared_ptr<ExplicitGraph> g, const char* s, const char* t) {
  const auto si = *g->find_name(s);
  const auto ti = *g->find_name(t);
  return GraphSpace(std::move(g), si, ti);
}

/// The first edge from `from` to `to` (serial 0).
inline EdgeRef edge(const ExplicitGraph& g, const char* from, const char* to) {
  const auto u = *g.find_name(from);
  const auto v = *g.find_name(to);
  for (const EdgeRef& e : g.out_edges(u))
    if (e.target == StateKey(v)) return e;
  throw std::runtime_error(std::string("no edge ") + from + "->" + to);
}

inline std::vector<StateKey> states(const ExplicitGraph& g, std::initializer_list<const char*> names) {
  std::vector<StateKey> out;
  for (const char* n : names) out.push_back(StateKey(*g.find_name(n)));
  return out;
}

/// Seeded random digraph with 2..max_vertices vertices, out-degree 0..max_out
/// (self-loops and parallel arcs allowed), weights in [wmin, wmax]. Start is
/// vertex 0 and goal the last vertex.
inline GraphSpace random_digraph(std::uint64_t seed, int max_vertices, int max_out, Cost wmin, Cost wmax) {
  std::mt19937_64 rng(seed);
  using kbest::domains::uniform_below;
  const int n = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_vertices - 1)));
  auto g = std::make_shared<ExplicitGraph>(n);
  for (int u = 0; u < n; ++u) {
    const int deg = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_out) + 1));
    for (int i = 0; i < deg; ++i) {
      const auto v = static_cast<std::uint32_t>(uniform_below(rng, static_cast<std::uint64_t>(n)));
      const Cost w = wmin + static_cast<Cost>(uniform_below(rng, static_cast<std::uint64_t>(wmax - wmin + 1)));
      g->add_edge(static_cast<std::uint32_t>(u), v, w);
    }
  }
  return GraphSpace(std::move(g), 0, static_cast<std::uint32_t>(n - 1));
}

/// Seeded map with roughly `blocked` of its cells as '@'.
inline std::shared_ptr<kbest::domains::GridMap> random_grid_map(std::uint64_t seed, int width, int height,
                                                                double blocked) {
  std::mt19937_64 rng(seed);
  std::vector<char> cells(static_cast<std::size_t>(width) * height, '.');
  const auto threshold = static_cast<std::uint64_t>(blocked * 1'000'000);
  for (char& c : cells)
    if (kbest::domains::uniform_below(rng, 1'000'000) < threshold) c = '@';
  return std::make_shared<kbest::domains::GridMap>(width, height, std::move(cells));
}

inline kbest::domains::DomainSetup grid_setup(std::shared_ptr<const kbest::domains::GridMap> map,
                                              const std::string& variant) {
  kbest::domains::DomainSetup s;
  s.kind = kbest::domains::DomainKind::Grid;
  s.variant = variant;
  s.grid = std::move(map);
  return s;
}

}  // namespace testsupport
