#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "kbest/core/metrics.hpp"
#include "kbest/core/solution_set.hpp"

namespace kbest {

/// Per-run resource caps. Zero means unlimited.
struct SearchLimits {
  std::uint64_t max_expansions = 0;
  std::uint64_t max_generated = 0;
  double max_seconds = 0.0;
};

struct SearchResult {
  SolutionSet solutions;
  RunMetrics metrics;
};

/// Thrown when a run hits one of its SearchLimits. Carries what had been
/// found and counted at that point.
class CappedRunError : public std::runtime_error {
 public:
  CappedRunError(const std::string& what, SearchResult partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}

  const SearchResult& partial() const noexcept { return partial_; }

 private:
  SearchResult partial_;
};

}  // namespace kbest
