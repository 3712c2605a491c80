#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kbest::bench {

struct ResultRow {
  std::string domain;
  std::string variant;
  std::size_t instance_id = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  std::size_t kappa = 0;
  std::size_t paths_found = 0;
  std::int64_t cost_min = 0;
  std::int64_t cost_max = 0;
  double elapsed_seconds = 0.0;
  std::uint64_t expansions = 0;
  std::uint64_t duplicate_pops = 0;
  std::uint64_t centroids_created = 0;
  std::uint64_t centroids_consumed = 0;
  std::uint64_t gb_insertions = 0;
  std::uint64_t ledger_bytes_estimate = 0;
  std::string status = "ok";  // ok | capped

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

/// Header line of field names in declaration order.
std::string csv_header();

/// Header plus one line per row; elapsed_seconds has six decimals.
std::string emit_csv(const std::vector<ResultRow>& rows);

/// Inverse of emit_csv. Throws ParseError on a malformed header or line.
std::vector<ResultRow> parse_csv(std::string_view text);

/// Per-algorithm series of (kappa, mean over completed runs, completed count)
/// as whitespace columns under `# series: <algorithm>` comments. `metric` is
/// elapsed_seconds, expansions or ledger_bytes_estimate; anything else throws
/// ConfigError.
std::string emit_plot_data(const std::vector<ResultRow>& rows, std::string_view metric);

}  // namespace kbest::bench
