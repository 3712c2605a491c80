#pragma once

#include <cstddef>
#include <string_view>

#include "kbest/bela/trace.hpp"
#include "kbest/core/result.hpp"
#include "kbest/core/search_space.hpp"

namespace kbest::bela {

/// Secondary ordering among open nodes of equal f.
enum class TieBreak {
  Fifo,   // earlier insertion first
  Lifo,   // later insertion first
  HighG,  // larger g first, then earlier insertion
};

std::string_view to_string(TieBreak t);
TieBreak parse_tiebreak(std::string_view s);

struct SearchOptions {
  std::size_t kappa = 1;
  TieBreak tiebreak = TieBreak::Fifo;
  // false: f = g (BELA0). true: f = g + h (BELA*).
  bool use_heuristic = false;
  SearchLimits limits;
  // States sampled by the up-front consistency check when use_heuristic is set.
  std::size_t validation_sample = 64;
  TraceHook trace;
};

/// Finds the kappa cheapest (not necessarily simple) start-goal paths.
///
/// Best-first search that stores every traversed edge in the closed ledger and
/// derives solution paths from centroids: goal pops and duplicate pops
/// enqueue centroids, and a centroid is expanded into paths once its cost is
/// at most the f-value of the node just popped. Paths are returned in
/// nondecreasing cost order. With use_heuristic the heuristic must be
/// consistent; an inconsistency observed up front or on any generated edge
/// raises ConfigError. Exceeding a limit raises CappedRunError.
SearchResult bela_search(const SearchSpace& space, const SearchOptions& options);

}  // namespace kbest::bela
