#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "kbest/bela/centroid_queue.hpp"
#include "kbest/bela/ledger.hpp"
#include "kbest/bela/trace.hpp"
#include "kbest/core/metrics.hpp"
#include "kbest/core/search_space.hpp"

namespace kbest::bela {

/// The structures a reconstruction walk reads and updates.
struct WalkContext {
  const SearchSpace& space;
  ClosedLedger& ledger;
  CentroidQueue& queue;
  RunMetrics* metrics = nullptr;
  const TraceHook* trace = nullptr;
};

/// Receives each enumerated path; return false to stop the enumeration.
using PathSink = std::function<bool(const Path&)>;

bool is_sidetrack(const EdgeRef& edge, const ClosedLedger& ledger);

/// Records backward cost `gb` at a closed state. If it is new, every recorded
/// incoming sidetrack p -> state yields the centroid <p -> state, g*(p) + w + gb>.
/// Returns the number of centroids enqueued (0 when gb was already known).
std::size_t register_gb(const WalkContext& ctx, StateKey state, Cost gb);

/// Backward walk over tree edges producing every optimal path from the start
/// to `state`, registering gb + (cost walked so far) at each visited state.
/// Returns false if the sink stopped the walk. Registrations made before the
/// stop persist.
bool for_each_prefix(const WalkContext& ctx, StateKey state, Cost gb, const PathSink& sink);

/// Forward walk from `state` producing paths to the goal of cost exactly `gb`,
/// following only edges into the goal with the residual exhausted or into
/// closed states that already know the residual as a backward cost. The
/// starting state registers `gb` like a prefix walk does.
bool for_each_suffix(const WalkContext& ctx, StateKey state, Cost gb, const PathSink& sink);

std::vector<Path> get_prefixes(const WalkContext& ctx, StateKey state, Cost gb, std::size_t budget);
std::vector<Path> get_suffixes(const WalkContext& ctx, StateKey state, Cost gb, std::size_t budget);

/// Every prefix ++ edge ++ suffix combination for `z`, each of cost z.total_cost.
/// `suffix_budget` bounds how many suffixes are materialized per round; if the
/// sink is still hungry after a truncated round the suffix list is regrown.
bool for_each_path(const WalkContext& ctx, const Centroid& z, std::size_t suffix_budget,
                   const PathSink& sink);

std::vector<Path> get_paths(const WalkContext& ctx, const Centroid& z, std::size_t budget);

}  // namespace kbest::bela
