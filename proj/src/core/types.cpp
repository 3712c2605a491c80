#include "kbest/core/types.hpp"

#include <charconv>
#include <string>

#include "kbest/core/errors.hpp"
#include "kbest/core/search_space.hpp"

namespace kbest {

Cost path_cost(const Path& path) {
  if (path.states.empty()) throw StructureError("path has no states", 0);
  if (path.edges.size() + 1 != path.states.size())
    throw StructureError("path has " + std::to_string(path.states.size()) + " states but " +
                             std::to_string(path.edges.size()) + " edges",
                         path.edges.size());
  Cost total = 0;
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    const EdgeRef& e = path.edges[i];
    if (e.source != path.states[i] || e.target != path.states[i + 1])
      throw StructureError("edge " + std::to_string(i) + " is not linked to its states", i);
    total += e.weight;
  }
  return total;
}

Path make_path(StateKey start, std::vector<EdgeRef> edges) {
  Path p;
  p.states.reserve(edges.size() + 1);
  p.states.push_back(start);
  for (const EdgeRef& e : edges) {
    p.states.push_back(e.target);
    p.cost += e.weight;
  }
  p.edges = std::move(edges);
  return p;
}

std::size_t hash_value(const EdgeRef& e) noexcept {
  std::size_t seed = std::hash<StateKey>{}(e.source);
  hash_combine(seed, std::hash<StateKey>{}(e.target));
  hash_combine(seed, static_cast<std::size_t>(e.weight));
  hash_combine(seed, e.serial);
  return seed;
}

std::size_t hash_value(const Path& p) noexcept {
  std::size_t seed = static_cast<std::size_t>(p.cost);
  if (!p.states.empty()) hash_combine(seed, std::hash<StateKey>{}(p.states.front()));
  for (const EdgeRef& e : p.edges) hash_combine(seed, hash_value(e));
  return seed;
}

StateKey SearchSpace::parse_state(std::string_view token) const {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("bad state token '" + std::string(token) + "'", 0);
  return StateKey{v};
}

}  // namespace kbest
