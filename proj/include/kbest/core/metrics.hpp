#pragma once

#include <cstdint>

namespace kbest {

struct LedgerSizes {
  std::uint64_t states_closed = 0;
  std::uint64_t edges_recorded = 0;
  std::uint64_t gb_values = 0;
  std::uint64_t open_peak = 0;
};

/// Counters collected by every search algorithm. All counters only grow during
/// a run; for a fixed instance, algorithm and tie-break policy everything but
/// `elapsed_seconds` is reproducible.
struct RunMetrics {
  std::uint64_t expansions = 0;
  std::uint64_t duplicate_pops = 0;
  std::uint64_t goal_pops = 0;
  std::uint64_t centroids_created = 0;
  std::uint64_t centroids_consumed = 0;
  std::uint64_t gb_insertions = 0;
  std::uint64_t paths_emitted = 0;
  // Paths produced by a centroid that were already members of the solution set.
  std::uint64_t paths_repeated = 0;
  double elapsed_seconds = 0.0;
  LedgerSizes ledger;
};

/// Structure-count memory model: documented per-record sizes times counts.
/// Approximates the footprint of the search structures without querying the OS.
struct MemoryModel {
  static constexpr std::uint64_t kClosedStateBytes = 64;
  static constexpr std::uint64_t kEdgeBytes = 32;
  static constexpr std::uint64_t kGbValueBytes = 8;
  static constexpr std::uint64_t kCentroidBytes = 48;
  static constexpr std::uint64_t kOpenNodeBytes = 56;
};

inline std::uint64_t ledger_bytes_estimate(const RunMetrics& m) {
  return m.ledger.states_closed * MemoryModel::kClosedStateBytes +
         m.ledger.edges_recorded * MemoryModel::kEdgeBytes +
         m.ledger.gb_values * MemoryModel::kGbValueBytes +
         m.centroids_created * MemoryModel::kCentroidBytes +
         m.ledger.open_peak * MemoryModel::kOpenNodeBytes;
}

}  // namespace kbest
