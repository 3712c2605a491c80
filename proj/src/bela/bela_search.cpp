#include "kbest/bela/bela_search.hpp"

#include <chrono>
#include <queue>
#include <string>

#include "kbest/bela/centroid_queue.hpp"
#include "kbest/bela/enumerate.hpp"
#include "kbest/bela/ledger.hpp"
#include "kbest/core/errors.hpp"
#include "kbest/core/validate.hpp"

namespace kbest::bela {

std::string_view to_string(TraceKind kind) {
  switch (kind) {
    case TraceKind::Expand: return "expand";
    case TraceKind::Duplicate: return "duplicate";
    case TraceKind::GoalPop: return "goal-pop";
    case TraceKind::CentroidCreated: return "centroid-created";
    case TraceKind::CentroidConsumed: return "centroid-consumed";
    case TraceKind::GbRegistered: return "gb-registered";
    case TraceKind::PathEmitted: return "path-emitted";
  }
  return "?";
}

std::string_view to_string(TieBreak t) {
  switch (t) {
    case TieBreak::Fifo: return "fifo";
    case TieBreak::Lifo: return "lifo";
    case TieBreak::HighG: return "highg";
  }
  return "?";
}

TieBreak parse_tiebreak(std::string_view s) {
  if (s == "fifo") return TieBreak::Fifo;
  if (s == "lifo") return TieBreak::Lifo;
  if (s == "highg") return TieBreak::HighG;
  throw ConfigError("unknown tie-break policy '" + std::string(s) + "'");
}

namespace {

struct OpenNode {
  StateKey state;
  Cost g;
  Cost f;
  EdgeRef via;  // meaningless for the start node
  std::uint64_t seq;
};

// "Later" ordering for std::priority_queue: returns true when a pops after b.
struct OpenOrder {
  TieBreak policy;
  bool operator()(const OpenNode& a, const OpenNode& b) const {
    if (a.f != b.f) return a.f > b.f;
    switch (policy) {
      case TieBreak::Fifo: return a.seq > b.seq;
      case TieBreak::Lifo: return a.seq < b.seq;
      case TieBreak::HighG:
        if (a.g != b.g) return a.g < b.g;
        return a.seq > b.seq;
    }
    return a.seq > b.seq;
  }
};

class Engine {
 public:
  Engine(const SearchSpace& space, const SearchOptions& options)
      : space_(space),
        options_(options),
        open_(OpenOrder{options.tiebreak}),
        ctx_{space, ledger_, queue_, &result_.metrics, options.trace ? &options.trace : nullptr},
        started_(std::chrono::steady_clock::now()) {}

  SearchResult run() {
    check_preconditions();
    const StateKey goal = space_.goal();
    push_open(space_.start(), 0, EdgeRef{});

    while (!open_.empty()) {
      const OpenNode n = open_.top();
      open_.pop();

      while (auto z = pop_eligible_centroid(queue_, n.f)) {
        if (consume(*z)) return finish(false);
      }

      if (n.state == goal) {
        ++result_.metrics.goal_pops;
        trace(TraceKind::GoalPop, n.state, n.via, n.g, n.f);
        enqueue(Centroid{n.via, n.g});
        continue;
      }

      if (ClosedEntry* entry = ledger_.find(n.state)) {
        ++result_.metrics.duplicate_pops;
        trace(TraceKind::Duplicate, n.state, n.via, n.g, n.f);
        entry->incoming.push_back(n.via);
        ledger_.note_edge_recorded();
        // Tree or sidetrack alike: with a heuristic, a tree edge recorded
        // late may be the only route to prefixes missed by earlier centroids.
        const std::vector<Cost> gbs = entry->gb_values;
        for (Cost gb : gbs) enqueue(Centroid{n.via, n.g + gb});
        continue;
      }

      expand(n);
    }

    while (auto z = queue_.pop()) {
      if (consume(*z)) return finish(false);
    }
    return finish(true);
  }

 private:
  void check_preconditions() {
    if (options_.kappa == 0) throw PreconditionError("kappa must be at least 1");
    if (space_.start() == space_.goal()) throw PreconditionError("start state equals goal state");
    if (options_.use_heuristic) {
      if (!space_.has_heuristic()) throw ConfigError("heuristic search requested on a space without a heuristic");
      ValidationReport report = validate_search_space(space_, options_.validation_sample);
      if (!report.consistent())
        throw ConfigError("inconsistent heuristic: " + report.summary());
    }
  }

  Cost h(StateKey s) const { return options_.use_heuristic ? space_.heuristic(s) : 0; }

  void push_open(StateKey s, Cost g, const EdgeRef& via) {
    open_.push(OpenNode{s, g, g + h(s), via, seq_++});
    if (open_.size() > result_.metrics.ledger.open_peak) result_.metrics.ledger.open_peak = open_.size();
    if (options_.limits.max_generated && seq_ > options_.limits.max_generated)
      capped("generated-node limit reached");
  }

  void expand(const OpenNode& n) {
    ClosedEntry& entry = ledger_.close(n.state, n.g);
    if (n.state != space_.start()) {
      entry.incoming.push_back(n.via);
      ledger_.note_edge_recorded();
    }
    ++result_.metrics.expansions;
    trace(TraceKind::Expand, n.state, std::nullopt, n.g, n.f);
    check_limits();

    space_.successors(n.state, children_);
    const Cost hn = h(n.state);
    for (const EdgeRef& e : children_) {
      if (e.weight < 0)
        throw ConfigError("negative edge weight on " + space_.render(e.source) + " -> " +
                          space_.render(e.target));
      const Cost hc = h(e.target);
      if (hn > e.weight + hc)
        throw ConfigError("inconsistent heuristic on " + space_.render(e.source) + " -> " +
                          space_.render(e.target));
      push_open(e.target, n.g + e.weight, e);
    }
  }

  void enqueue(const Centroid& z) {
    if (queue_.push(z)) {
      ++result_.metrics.centroids_created;
      trace(TraceKind::CentroidCreated, z.edge.source, z.edge, z.total_cost, 0);
    }
  }

  // Adds the paths of `z` to the solution set; true once kappa paths are held.
  bool consume(const Centroid& z) {
    ++result_.metrics.centroids_consumed;
    trace(TraceKind::CentroidConsumed, z.edge.source, z.edge, z.total_cost, 0);
    SolutionSet& solutions = result_.solutions;
    const std::size_t kappa = options_.kappa;
    for_each_path(ctx_, z, kappa - solutions.size(), [&](const Path& p) {
      if (p.cost != z.total_cost)
        throw InvariantError("centroid of cost " + std::to_string(z.total_cost) +
                             " produced a path of cost " + std::to_string(p.cost));
      if (solutions.push(p)) {
        ++result_.metrics.paths_emitted;
        trace(TraceKind::PathEmitted, p.states.back(), std::nullopt, p.cost, 0);
      } else {
        ++result_.metrics.paths_repeated;
      }
      return solutions.size() < kappa;
    });
    return solutions.size() >= kappa;
  }

  void trace(TraceKind kind, StateKey s, std::optional<EdgeRef> edge, Cost value, Cost f) const {
    if (options_.trace) options_.trace(TraceEvent{kind, s, edge, value, f});
  }

  void check_limits() {
    const SearchLimits& lim = options_.limits;
    if (lim.max_expansions && result_.metrics.expansions > lim.max_expansions)
      capped("expansion limit reached");
    if (lim.max_seconds > 0 && (result_.metrics.expansions & 1023) == 0 && elapsed() > lim.max_seconds)
      capped("time limit reached");
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
  }

  void fill_sizes() {
    RunMetrics& m = result_.metrics;
    m.ledger.states_closed = ledger_.size();
    m.ledger.edges_recorded = ledger_.edges_recorded();
    m.ledger.gb_values = m.gb_insertions;
    m.elapsed_seconds = elapsed();
  }

  [[noreturn]] void capped(const std::string& why) {
    fill_sizes();
    throw CappedRunError(why, std::move(result_));
  }

  SearchResult finish(bool exhausted) {
    fill_sizes();
    result_.solutions.set_complete(exhausted && result_.solutions.size() < options_.kappa);
    return std::move(result_);
  }

  const SearchSpace& space_;
  const SearchOptions& options_;
  ClosedLedger ledger_;
  CentroidQueue queue_;
  std::priority_queue<OpenNode, std::vector<OpenNode>, OpenOrder> open_;
  SearchResult result_;
  WalkContext ctx_;
  std::vector<EdgeRef> children_;
  std::uint64_t seq_ = 0;
  std::chrono::steady_clock::time_point started_;
};

}  // namespace

SearchResult bela_search(const SearchSpace& space, const SearchOptions& options) {
  Engine engine(space, options);
  return engine.run();
}

}  // namespace kbest::bela
