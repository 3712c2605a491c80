#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kbest/bela/bela_search.hpp"
#include "kbest/bench/csv.hpp"
#include "kbest/core/result.hpp"
#include "kbest/domains/instances.hpp"

namespace kbest::bench {

enum class Algorithm { Bela0, BelaStar, MDijkstra, MAStar };

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view s);

struct RunOutcome {
  SearchResult result;
  bool capped = false;
};

/// One fresh search. The starred algorithms use the space's heuristic when
/// it has one and fall back to h = 0 otherwise.
RunOutcome run_algorithm(const SearchSpace& space, Algorithm algorithm, std::size_t kappa,
                         bela::TieBreak tiebreak = bela::TieBreak::Fifo, SearchLimits limits = {});

struct ExperimentConfig {
  std::string domain;
  std::string variant;
  std::string input;   // .gr or .map file
  std::string coords;  // optional .co file
  bool no_corner_cutting = false;
  int size = 0;        // pancake N or puzzle side for generated instances

  // Either an instance file or generator seeds.
  std::string instances;
  std::vector<std::uint64_t> seeds;
  domains::GenParams gen;

  std::vector<Algorithm> algorithms;
  std::vector<std::size_t> kappas;
  SearchLimits limits;
  bela::TieBreak tiebreak = bela::TieBreak::Fifo;
  std::size_t repetitions = 1;
  std::size_t workers = 1;

  /// Throws ConfigError describing the first problem.
  void validate() const;
};

/// Flat `key = value` text; `#` starts a comment. Relative paths are resolved
/// against `base_dir`. Keys: domain, variant, input, coords, no_corner_cutting,
/// size, instances, seed + count or seeds, min_km, min_frac, min_gap,
/// walk_length, algorithms, kappa, max_expansions, max_generated,
/// max_seconds, tiebreak, repetitions, workers.
ExperimentConfig parse_config(std::string_view text, const std::string& base_dir = {});

struct ResolvedExperiment {
  domains::DomainSetup setup;
  std::vector<domains::InstanceSpec> instances;
};

/// Loads the domain and the instances. Throws ConfigError when they cannot
/// be resolved.
ResolvedExperiment resolve(const ExperimentConfig& config);

/// Every (instance, algorithm, kappa, repetition) combination run from
/// scratch, in that nesting order. Capped runs become rows with status
/// "capped". Rows do not depend on the worker count.
std::vector<ResultRow> run_experiment(const ExperimentConfig& config);
std::vector<ResultRow> run_experiment(const ExperimentConfig& config, const domains::DomainSetup& setup,
                                      const std::vector<domains::InstanceSpec>& instances);

}  // namespace kbest::bench
