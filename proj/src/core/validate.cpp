#include "kbest/core/validate.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

namespace kbest {

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << "sampled " << states_sampled << " states, " << edges_checked << " edges; "
     << negative_edges.size() << " negative, " << inconsistent_edges.size() << " inconsistent";
  if (goal_heuristic_nonzero) os << ", h(goal) != 0";
  if (zero_weight_cycle) os << ", zero-weight cycle";
  return os.str();
}

namespace {

// Three-color DFS over the zero-weight subgraph of the sampled states.
bool has_zero_cycle(const std::vector<std::vector<std::size_t>>& zero_adj) {
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> color(zero_adj.size(), kWhite);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < zero_adj.size(); ++root) {
    if (color[root] != kWhite) continue;
    stack.push_back({root, 0});
    color[root] = kGrey;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < zero_adj[node].size()) {
        std::size_t child = zero_adj[node][next++];
        if (color[child] == kGrey) return true;
        if (color[child] == kWhite) {
          color[child] = kGrey;
          stack.push_back({child, 0});
        }
      } else {
        color[node] = kBlack;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

ValidationReport validate_search_space(const SearchSpace& space, std::size_t sample) {
  ValidationReport report;
  const bool heuristic = space.has_heuristic();
  if (heuristic && space.heuristic(space.goal()) != 0) report.goal_heuristic_nonzero = true;
  if (sample == 0) return report;

  std::unordered_map<StateKey, std::size_t> index;
  std::vector<StateKey> order;
  std::deque<StateKey> frontier;
  index.emplace(space.start(), 0);
  order.push_back(space.start());
  frontier.push_back(space.start());

  std::vector<std::pair<std::size_t, StateKey>> zero_edges;
  std::vector<EdgeRef> succ;
  while (!frontier.empty()) {
    StateKey n = frontier.front();
    frontier.pop_front();
    space.successors(n, succ);
    const Cost hn = heuristic ? space.heuristic(n) : 0;
    for (const EdgeRef& e : succ) {
      ++report.edges_checked;
      if (e.weight < 0) report.negative_edges.push_back(e);
      if (heuristic && hn > e.weight + space.heuristic(e.target))
        report.inconsistent_edges.push_back(e);
      if (e.weight == 0) zero_edges.push_back({index.at(n), e.target});
      if (!index.count(e.target) && order.size() < sample) {
        index.emplace(e.target, order.size());
        order.push_back(e.target);
        frontier.push_back(e.target);
      }
    }
  }
  report.states_sampled = order.size();

  std::vector<std::vector<std::size_t>> zero_adj(order.size());
  for (auto [from, to] : zero_edges) {
    auto it = index.find(to);
    if (it != index.end()) zero_adj[from].push_back(it->second);
  }
  report.zero_weight_cycle = has_zero_cycle(zero_adj);
  return report;
}

}  // namespace kbest
