#include "kbest/baselines/brute_force.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

namespace kbest::baselines {

namespace {

constexpr std::uint32_t kRoot = std::numeric_limits<std::uint32_t>::max();

// States that are reachable from the start and can still reach the goal.
std::unordered_map<StateKey, bool> live_states(const SearchSpace& space, std::size_t hard_cap) {
  std::unordered_map<StateKey, std::vector<StateKey>> reverse;
  std::unordered_map<StateKey, bool> live;
  std::deque<StateKey> frontier{space.start()};
  live.emplace(space.start(), false);
  std::vector<EdgeRef> succ;
  while (!frontier.empty()) {
    const StateKey s = frontier.front();
    frontier.pop_front();
    if (s == space.goal()) continue;
    space.successors(s, succ);
    for (const EdgeRef& e : succ) {
      reverse[e.target].push_back(s);
      if (live.emplace(e.target, false).second) {
        if (live.size() > hard_cap)
          throw OracleOverflow("oracle: more than " + std::to_string(hard_cap) + " reachable states");
        frontier.push_back(e.target);
      }
    }
  }
  auto goal = live.find(space.goal());
  if (goal == live.end()) return live;
  goal->second = true;
  frontier.push_back(space.goal());
  while (!frontier.empty()) {
    const StateKey s = frontier.front();
    frontier.pop_front();
    auto it = reverse.find(s);
    if (it == reverse.end()) continue;
    for (StateKey p : it->second) {
      bool& flag = live[p];
      if (!flag) {
        flag = true;
        frontier.push_back(p);
      }
    }
  }
  return live;
}

struct PathNode {
  EdgeRef edge;  // edge into this node; unused for the root
  Cost g;
  std::uint32_t parent;
};

struct Entry {
  Cost g;
  std::uint64_t seq;
  std::uint32_t node;
};

struct Later {
  bool operator()(const Entry& a, const Entry& b) const {
    return a.g != b.g ? a.g > b.g : a.seq > b.seq;
  }
};

// Pops whole paths in nondecreasing cost; `accept` decides, for each goal path
// cost, whether to keep going (true) and receives the path.
template <typename OnGoal, typename Done>
bool enumerate_paths(const SearchSpace& space, std::size_t hard_cap, OnGoal on_goal, Done done) {
  const auto live = live_states(space, hard_cap);
  auto is_live = [&](StateKey s) {
    auto it = live.find(s);
    return it != live.end() && it->second;
  };
  if (!is_live(space.start())) return true;

  std::vector<PathNode> nodes;
  std::priority_queue<Entry, std::vector<Entry>, Later> open;
  std::uint64_t seq = 0;
  nodes.push_back(PathNode{EdgeRef{}, 0, kRoot});
  open.push(Entry{0, seq++, 0});
  std::vector<EdgeRef> succ;

  while (!open.empty()) {
    const Entry top = open.top();
    open.pop();
    if (done(top.g)) return false;
    const PathNode& node = nodes[top.node];
    const StateKey state = top.node == 0 ? space.start() : node.edge.target;
    if (state == space.goal()) {
      std::vector<EdgeRef> edges;
      for (std::uint32_t i = top.node; i != 0; i = nodes[i].parent) edges.push_back(nodes[i].edge);
      std::reverse(edges.begin(), edges.end());
      if (!on_goal(make_path(space.start(), std::move(edges)))) return false;
      continue;
    }
    space.successors(state, succ);
    const Cost g = node.g;
    for (const EdgeRef& e : succ) {
      if (!is_live(e.target)) continue;
      if (nodes.size() >= hard_cap)
        throw OracleOverflow("oracle: more than " + std::to_string(hard_cap) + " partial paths");
      nodes.push_back(PathNode{e, g + e.weight, top.node});
      open.push(Entry{g + e.weight, seq++, static_cast<std::uint32_t>(nodes.size() - 1)});
    }
  }
  return true;
}

}  // namespace

SolutionSet brute_force_k_paths(const SearchSpace& space, std::size_t kappa, std::size_t hard_cap) {
  SolutionSet out;
  if (kappa == 0) return out;
  const bool exhausted = enumerate_paths(
      space, hard_cap,
      [&](Path p) {
        out.push(std::move(p));
        return out.size() < kappa;
      },
      [](Cost) { return false; });
  out.set_complete(exhausted && out.size() < kappa);
  return out;
}

SolutionSet brute_force_cost_levels(const SearchSpace& space, std::size_t levels,
                                    std::size_t hard_cap) {
  SolutionSet out;
  if (levels == 0) return out;
  std::vector<Cost> distinct;
  const bool exhausted = enumerate_paths(
      space, hard_cap,
      [&](Path p) {
        if (distinct.empty() || distinct.back() != p.cost) distinct.push_back(p.cost);
        out.push(std::move(p));
        return true;
      },
      // Stop once nothing cheaper than a new (levels+1)-th cost can appear.
      [&](Cost g) { return distinct.size() == levels && g > distinct.back(); });
  out.set_complete(exhausted);
  return out;
}

}  // namespace kbest::baselines
