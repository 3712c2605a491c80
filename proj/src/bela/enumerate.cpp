#include "kbest/bela/enumerate.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "kbest/core/errors.hpp"

namespace kbest::bela {

namespace {

struct StackKey {
  StateKey state;
  Cost residual;
  friend bool operator==(const StackKey&, const StackKey&) = default;
};

struct StackKeyHash {
  std::size_t operator()(const StackKey& k) const noexcept {
    std::size_t seed = std::hash<StateKey>{}(k.state);
    hash_combine(seed, static_cast<std::size_t>(k.residual));
    return seed;
  }
};

// (state, residual) pairs on the current walk stack. With positive weights the
// residual changes on every step, so a repeat means a zero-weight cycle.
class CycleGuard {
 public:
  explicit CycleGuard(const SearchSpace& space, const char* walk) : space_(space), walk_(walk) {}

  void enter(StateKey s, Cost residual) {
    if (!keys_.insert({s, residual}).second)
      throw EnumerationError(std::string(walk_) + " walk revisits state " + space_.render(s) +
                             " with backward cost " + std::to_string(residual) +
                             ": zero-weight cycle");
  }
  void leave(StateKey s, Cost residual) { keys_.erase({s, residual}); }

 private:
  const SearchSpace& space_;
  const char* walk_;
  std::unordered_set<StackKey, StackKeyHash> keys_;
};

void emit(const WalkContext& ctx, TraceKind kind, StateKey state, std::optional<EdgeRef> edge,
          Cost value) {
  if (ctx.trace && *ctx.trace) (*ctx.trace)(TraceEvent{kind, state, edge, value, 0});
}

}  // namespace

bool is_sidetrack(const EdgeRef& edge, const ClosedLedger& ledger) {
  return ledger.is_sidetrack(edge);
}

std::size_t register_gb(const WalkContext& ctx, StateKey state, Cost gb) {
  ClosedEntry& entry = ctx.ledger.at(state);
  if (gb < 0) throw PreconditionError("negative backward cost " + std::to_string(gb));
  if (!entry.insert_gb(gb)) return 0;
  if (ctx.metrics) ++ctx.metrics->gb_insertions;
  emit(ctx, TraceKind::GbRegistered, state, std::nullopt, gb);

  std::size_t created = 0;
  for (const EdgeRef& in : entry.incoming) {
    const Cost through = ctx.ledger.at(in.source).g_star + in.weight;
    if (entry.g_star < through) {
      Centroid z{in, through + gb};
      if (ctx.queue.push(z)) {
        ++created;
        if (ctx.metrics) ++ctx.metrics->centroids_created;
        emit(ctx, TraceKind::CentroidCreated, in.source, in, z.total_cost);
      }
    }
  }
  return created;
}

bool for_each_prefix(const WalkContext& ctx, StateKey state, Cost gb, const PathSink& sink) {
  struct Frame {
    const ClosedEntry* entry;
    Cost gb;
    EdgeRef via;  // edge from this state to the state of the frame below
    std::size_t next;
  };
  const StateKey start = ctx.space.start();
  CycleGuard guard(ctx.space, "prefix");
  std::vector<Frame> stack;

  auto enter = [&](StateKey s, Cost b, const EdgeRef& via) {
    guard.enter(s, b);
    register_gb(ctx, s, b);
    stack.push_back(Frame{&ctx.ledger.at(s), b, via, 0});
  };
  auto leave = [&] {
    guard.leave(stack.back().entry->state, stack.back().gb);
    stack.pop_back();
  };

  enter(state, gb, EdgeRef{});
  Path path;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.entry->state == start) {
      path.states.clear();
      path.edges.clear();
      for (std::size_t i = stack.size(); i-- > 0;) {
        path.states.push_back(stack[i].entry->state);
        if (i > 0) path.edges.push_back(stack[i].via);
      }
      path.cost = stack.front().entry->g_star;
      leave();
      if (!sink(path)) return false;
      continue;
    }
    const std::vector<EdgeRef>& incoming = top.entry->incoming;
    bool descended = false;
    while (top.next < incoming.size()) {
      const EdgeRef e = incoming[top.next++];
      if (ctx.ledger.at(e.source).g_star + e.weight == top.entry->g_star) {
        enter(e.source, top.gb + e.weight, e);
        descended = true;
        break;
      }
    }
    if (!descended) leave();
  }
  return true;
}

bool for_each_suffix(const WalkContext& ctx, StateKey state, Cost gb, const PathSink& sink) {
  const StateKey goal = ctx.space.goal();
  if (state == goal) {
    if (gb != 0) return true;
    Path p;
    p.states.push_back(goal);
    return sink(p);
  }
  if (!ctx.ledger.contains(state))
    throw PreconditionError("suffix walk from unclosed state " + ctx.space.render(state));

  struct Frame {
    StateKey state;
    Cost residual;
    EdgeRef via;  // edge from the frame above into this state
    std::size_t next;
  };
  CycleGuard guard(ctx.space, "suffix");
  std::vector<Frame> stack;
  std::vector<std::vector<EdgeRef>> successors;  // one buffer per depth

  auto enter = [&](StateKey s, Cost r, const EdgeRef& via) {
    guard.enter(s, r);
    register_gb(ctx, s, r);
    if (successors.size() <= stack.size()) successors.emplace_back();
    ctx.space.successors(s, successors[stack.size()]);
    stack.push_back(Frame{s, r, via, 0});
  };

  enter(state, gb, EdgeRef{});
  Path path;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const std::vector<EdgeRef>& succ = successors[stack.size() - 1];
    bool descended = false;
    while (top.next < succ.size()) {
      const EdgeRef e = succ[top.next++];
      const Cost r = top.residual - e.weight;
      if (r < 0) continue;
      if (e.target == goal) {
        if (r != 0) continue;
        path.states.clear();
        path.edges.clear();
        for (std::size_t i = 0; i < stack.size(); ++i) {
          path.states.push_back(stack[i].state);
          if (i > 0) path.edges.push_back(stack[i].via);
        }
        path.states.push_back(goal);
        path.edges.push_back(e);
        path.cost = stack.front().residual;
        if (!sink(path)) return false;
        continue;
      }
      const ClosedEntry* next = ctx.ledger.find(e.target);
      if (next != nullptr && next->has_gb(r)) {
        enter(e.target, r, e);
        descended = true;
        break;
      }
    }
    if (!descended) {
      guard.leave(stack.back().state, stack.back().residual);
      stack.pop_back();
    }
  }
  return true;
}

std::vector<Path> get_prefixes(const WalkContext& ctx, StateKey state, Cost gb, std::size_t budget) {
  std::vector<Path> out;
  if (budget == 0) return out;
  for_each_prefix(ctx, state, gb, [&](const Path& p) {
    out.push_back(p);
    return out.size() < budget;
  });
  return out;
}

std::vector<Path> get_suffixes(const WalkContext& ctx, StateKey state, Cost gb, std::size_t budget) {
  std::vector<Path> out;
  if (budget == 0) return out;
  for_each_suffix(ctx, state, gb, [&](const Path& p) {
    out.push_back(p);
    return out.size() < budget;
  });
  return out;
}

namespace {

Path join(const Path& prefix, const EdgeRef& edge, const Path& suffix) {
  Path p;
  p.states.reserve(prefix.states.size() + suffix.states.size());
  p.states = prefix.states;
  p.states.insert(p.states.end(), suffix.states.begin(), suffix.states.end());
  p.edges.reserve(prefix.edges.size() + 1 + suffix.edges.size());
  p.edges = prefix.edges;
  p.edges.push_back(edge);
  p.edges.insert(p.edges.end(), suffix.edges.begin(), suffix.edges.end());
  p.cost = prefix.cost + edge.weight + suffix.cost;
  return p;
}

}  // namespace

bool for_each_path(const WalkContext& ctx, const Centroid& z, std::size_t suffix_budget,
                   const PathSink& sink) {
  const ClosedEntry& u = ctx.ledger.at(z.edge.source);
  const Cost gb_u = z.total_cost - u.g_star;
  const Cost gb_v = gb_u - z.edge.weight;
  if (gb_v < 0)
    throw InvariantError("centroid cost " + std::to_string(z.total_cost) +
                         " is below g*(u) + w = " + std::to_string(u.g_star + z.edge.weight));

  std::size_t cap = std::max<std::size_t>(suffix_budget, 1);
  std::unordered_set<Path> combined;
  for (;;) {
    std::vector<Path> suffixes = get_suffixes(ctx, z.edge.target, gb_v, cap);
    const bool truncated = suffixes.size() >= cap;
    std::erase_if(suffixes, [&](const Path& s) { return combined.count(s) != 0; });
    if (suffixes.empty()) return true;

    const bool finished = for_each_prefix(ctx, z.edge.source, gb_u, [&](const Path& prefix) {
      for (const Path& s : suffixes)
        if (!sink(join(prefix, z.edge, s))) return false;
      return true;
    });
    if (!finished) return false;
    if (!truncated) return true;
    combined.insert(suffixes.begin(), suffixes.end());
    cap *= 2;
  }
}

std::vector<Path> get_paths(const WalkContext& ctx, const Centroid& z, std::size_t budget) {
  std::vector<Path> out;
  if (budget == 0) return out;
  for_each_path(ctx, z, budget, [&](const Path& p) {
    out.push_back(p);
    return out.size() < budget;
  });
  return out;
}

}  // namespace kbest::bela
