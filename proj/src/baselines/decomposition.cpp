#include "kbest/baselines/decomposition.hpp"

#include <queue>
#include <set>
#include <string>

#include "kbest/core/errors.hpp"

namespace kbest::baselines {

GStarMap dijkstra_gstar(const SearchSpace& space, std::size_t cap) {
  GStarMap best;
  std::priority_queue<std::pair<Cost, StateKey>, std::vector<std::pair<Cost, StateKey>>,
                      std::greater<>>
      open;
  GStarMap settled;
  best[space.start()] = 0;
  open.push({0, space.start()});
  std::vector<EdgeRef> succ;
  while (!open.empty() && settled.size() < cap) {
    auto [g, s] = open.top();
    open.pop();
    if (!settled.emplace(s, g).second) continue;
    if (s == space.goal()) continue;
    space.successors(s, succ);
    for (const EdgeRef& e : succ) {
      const Cost ng = g + e.weight;
      auto it = best.find(e.target);
      if (it == best.end() || ng < it->second) {
        best[e.target] = ng;
        open.push({ng, e.target});
      }
    }
  }
  return settled;
}

namespace {

Cost lookup(const GStarMap& gstar, StateKey s) {
  auto it = gstar.find(s);
  if (it == gstar.end())
    throw PreconditionError("g* unknown for state " + std::to_string(s.value()));
  return it->second;
}

}  // namespace

Decomposition first_sidetrack_decomposition(const Path& path, const GStarMap& gstar) {
  Decomposition d;
  for (StateKey s : path.states) lookup(gstar, s);
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    const EdgeRef& e = path.edges[i];
    if (lookup(gstar, e.target) < lookup(gstar, e.source) + e.weight) {
      d.prefix.states.assign(path.states.begin(), path.states.begin() + i + 1);
      d.prefix.edges.assign(path.edges.begin(), path.edges.begin() + i);
      d.prefix.cost = path_cost(d.prefix);
      d.sidetrack = e;
      if (i + 2 < path.states.size()) {
        d.suffix.states.assign(path.states.begin() + i + 1, path.states.end());
        d.suffix.edges.assign(path.edges.begin() + i + 1, path.edges.end());
        d.suffix.cost = path_cost(d.suffix);
      }
      return d;
    }
  }
  d.prefix = path;
  return d;
}

PartitionReport centroid_partition_check(const std::vector<Path>& paths, const GStarMap& gstar) {
  PartitionReport r;
  std::set<std::pair<std::vector<StateKey>, std::vector<EdgeRef>>> seen;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    const std::string tag = "path #" + std::to_string(i);
    if (!seen.insert({p.states, p.edges}).second) {
      r.violations.push_back(tag + " listed twice");
      continue;
    }
    const Decomposition d = first_sidetrack_decomposition(p, gstar);
    const Cost optimum = lookup(gstar, p.states.back());
    if (!d.sidetrack) {
      ++r.optimal_paths;
      if (p.cost != optimum) r.violations.push_back(tag + " has no sidetrack but is suboptimal");
      continue;
    }
    ++r.suboptimal_paths;
    if (p.cost <= optimum) r.violations.push_back(tag + " has a sidetrack but is optimal");
    const EdgeRef& e = *d.sidetrack;
    if (d.prefix.cost != lookup(gstar, e.source))
      r.violations.push_back(tag + " prefix is not optimal");
    const Cost composed = lookup(gstar, e.source) + e.weight + d.suffix.cost;
    if (composed != p.cost)
      r.violations.push_back(tag + " cost " + std::to_string(p.cost) +
                             " differs from its centroid composition " + std::to_string(composed));
    r.groups[CentroidKey{e, p.cost}].push_back(i);
  }
  std::size_t grouped = 0;
  for (const auto& [key, members] : r.groups) grouped += members.size();
  if (grouped != r.suboptimal_paths) r.violations.push_back("group membership count mismatch");
  return r;
}

std::vector<std::string> adjacent_path_check(const std::vector<Path>& paths, const GStarMap& gstar) {
  // Cheapest path cost whose prefix contains each state.
  std::unordered_map<StateKey, Cost> cheapest;
  std::vector<Decomposition> parts;
  parts.reserve(paths.size());
  for (const Path& p : paths) {
    parts.push_back(first_sidetrack_decomposition(p, gstar));
    for (StateKey s : parts.back().prefix.states) {
      auto [it, fresh] = cheapest.emplace(s, p.cost);
      if (!fresh && p.cost < it->second) it->second = p.cost;
    }
  }
  std::vector<std::string> violations;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (!parts[i].sidetrack) continue;
    const StateKey v = parts[i].sidetrack->target;
    auto it = cheapest.find(v);
    if (it == cheapest.end() || it->second >= paths[i].cost)
      violations.push_back("path #" + std::to_string(i) + ": no cheaper path has state " +
                           std::to_string(v.value()) + " in its prefix");
  }
  return violations;
}

}  // namespace kbest::baselines
