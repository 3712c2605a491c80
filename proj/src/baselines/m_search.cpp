#include "kbest/baselines/m_search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <queue>
#include <unordered_map>
#include <vector>

#include "kbest/core/errors.hpp"

namespace kbest::baselines {

namespace {

constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

// An expanded node. Edge weight and source are recovered from the parent.
struct MNode {
  StateKey state;
  Cost g;
  std::uint32_t parent;
  std::uint32_t serial;
};

struct OpenEntry {
  Cost f;
  Cost g;
  std::uint64_t seq;
  StateKey state;
  std::uint32_t parent;
  std::uint32_t serial;
};

struct Later {
  bool operator()(const OpenEntry& a, const OpenEntry& b) const {
    if (a.f != b.f) return a.f > b.f;
    return a.seq > b.seq;
  }
};

}  // namespace

SearchResult m_search(const SearchSpace& space, const MSearchOptions& options) {
  if (options.kappa == 0) throw PreconditionError("kappa must be at least 1");
  if (space.start() == space.goal()) throw PreconditionError("start state equals goal state");
  if (options.use_heuristic && !space.has_heuristic())
    throw ConfigError("heuristic search requested on a space without a heuristic");

  const auto started = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  };
  const StateKey goal = space.goal();
  const std::size_t kappa = options.kappa;
  auto h = [&](StateKey s) { return options.use_heuristic ? space.heuristic(s) : Cost{0}; };

  SearchResult result;
  RunMetrics& m = result.metrics;
  std::vector<MNode> arena;
  std::unordered_map<StateKey, std::uint32_t> expanded;
  std::priority_queue<OpenEntry, std::vector<OpenEntry>, Later> open;
  std::uint64_t seq = 0;
  std::vector<EdgeRef> succ;

  auto finish = [&](bool exhausted) {
    m.ledger.states_closed = arena.size();
    m.elapsed_seconds = elapsed();
    result.solutions.set_complete(exhausted && result.solutions.size() < kappa);
  };
  auto capped = [&](const char* why) {
    finish(false);
    throw CappedRunError(why, std::move(result));
  };

  auto rebuild = [&](const OpenEntry& last) {
    std::vector<EdgeRef> edges;
    StateKey target = last.state;
    Cost g = last.g;
    std::uint32_t serial = last.serial;
    for (std::uint32_t p = last.parent; p != kNoParent; p = arena[p].parent) {
      edges.push_back(EdgeRef{arena[p].state, target, g - arena[p].g, serial});
      target = arena[p].state;
      g = arena[p].g;
      serial = arena[p].serial;
    }
    std::reverse(edges.begin(), edges.end());
    return make_path(space.start(), std::move(edges));
  };

  open.push(OpenEntry{h(space.start()), 0, seq++, space.start(), kNoParent, 0});
  while (!open.empty()) {
    const OpenEntry n = open.top();
    open.pop();

    if (n.state == goal) {
      ++m.goal_pops;
      if (result.solutions.push(rebuild(n))) ++m.paths_emitted;
      else throw InvariantError("mA* produced the same path twice");
      if (result.solutions.size() >= kappa) {
        finish(false);
        return result;
      }
      continue;
    }

    std::uint32_t& count = expanded[n.state];
    if (count >= kappa) {
      ++m.duplicate_pops;
      continue;
    }
    ++count;
    ++m.expansions;
    if (options.limits.max_expansions && m.expansions > options.limits.max_expansions)
      capped("expansion limit reached");
    if (options.limits.max_seconds > 0 && (m.expansions & 1023) == 0 &&
        elapsed() > options.limits.max_seconds)
      capped("time limit reached");

    const auto self = static_cast<std::uint32_t>(arena.size());
    arena.push_back(MNode{n.state, n.g, n.parent, n.serial});

    space.successors(n.state, succ);
    for (const EdgeRef& e : succ) {
      if (e.weight < 0) throw ConfigError("negative edge weight");
      if (e.target != goal) {
        auto it = expanded.find(e.target);
        if (it != expanded.end() && it->second >= kappa) continue;
      }
      const Cost g = n.g + e.weight;
      open.push(OpenEntry{g + h(e.target), g, seq++, e.target, self, e.serial});
    }
    if (open.size() > m.ledger.open_peak) m.ledger.open_peak = open.size();
    if (options.limits.max_generated && seq > options.limits.max_generated)
      capped("generated-node limit reached");
  }
  finish(true);
  return result;
}

}  // namespace kbest::baselines
