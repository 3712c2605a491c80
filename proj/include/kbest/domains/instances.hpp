#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "kbest/core/search_space.hpp"
#include "kbest/domains/explicit_graph.hpp"
#include "kbest/domains/grid.hpp"
#include "kbest/domains/haversine.hpp"
#include "kbest/domains/pancake.hpp"
#include "kbest/domains/puzzle.hpp"

namespace kbest::domains {

enum class DomainKind { Roadmap, Grid, Pancake, Puzzle };

std::string_view to_string(DomainKind d);
DomainKind parse_domain(std::string_view s);

/// Canonical variant names: roadmap dimacs|unit, grid unit|octile,
/// pancake and puzzle unit|heavy. Throws ConfigError for anything else.
void check_variant(DomainKind d, std::string_view variant);

/// Everything needed to turn an instance into a search space. Immutable once
/// loaded and shared by concurrent runs.
struct DomainSetup {
  DomainKind kind = DomainKind::Grid;
  std::string variant;
  std::shared_ptr<const ExplicitGraph> graph;  // roadmap, with its original weights
  std::shared_ptr<const ExplicitGraph> unit_graph;
  HeuristicScale scale;
  std::shared_ptr<const GridMap> grid;
  bool no_corner_cutting = false;
  int size = 0;  // pancake N or puzzle side; 0 when taken from the instances
};

/// Reads the artifact behind a domain: a .gr file (plus its .co when
/// `coords` is given or a sibling with the same stem exists) for roadmap, a
/// .map file for grid. Pancake and puzzle take no input file.
DomainSetup load_domain(DomainKind kind, std::string variant, const std::string& input,
                        const std::string& coords = {}, bool no_corner_cutting = false);

/// Start and goal encoded per domain: roadmap {vertex} (0-based), grid {x, y},
/// pancake a permutation of 1..N, puzzle a row-major board.
struct InstanceSpec {
  DomainKind domain = DomainKind::Grid;
  std::vector<int> start;
  std::vector<int> goal;
  std::uint64_t seed = 0;
  std::string source;
};

std::unique_ptr<SearchSpace> make_space(const DomainSetup& setup, const InstanceSpec& instance);

struct GenParams {
  double min_km = 50.0;     // roadmap: great-circle distance between s and t
  double min_frac = 0.9;    // grid: fraction of the corner-to-corner heuristic
  std::optional<int> min_gap;  // pancake: defaults to N - 2
  int walk_length = 200;    // puzzle: random moves applied to the goal
  std::size_t budget = 1'000'000;  // rejection attempts per instance
};

/// Rejection sampler with a private PRNG per instance, so a seed always
/// yields the same instance.
class InstanceGenerator {
 public:
  InstanceGenerator(const DomainSetup& setup, GenParams params);

  InstanceSpec generate(std::uint64_t seed) const;
  // Seeds first_seed, first_seed + 1, ...
  std::vector<InstanceSpec> generate_many(std::uint64_t first_seed, std::size_t count) const;

 private:
  InstanceSpec roadmap(std::mt19937_64& rng) const;
  InstanceSpec grid(std::mt19937_64& rng) const;
  InstanceSpec pancake(std::mt19937_64& rng) const;
  InstanceSpec puzzle(std::mt19937_64& rng) const;

  const DomainSetup& setup_;
  GenParams params_;
  std::vector<std::uint32_t> passable_;   // grid cells as indices
  std::vector<std::uint32_t> component_;  // grid connected-component label per cell
};

/// Uniform integer in [0, n) that does not depend on the standard library's
/// distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// One instance per line: permutations `start | goal`, grid `sx sy tx ty`,
/// roadmap `s t` (1-based). A trailing `# seed=<n>` comment records the seed.
std::string format_instance(const InstanceSpec& instance);
std::string write_instances(const std::vector<InstanceSpec>& instances);
std::vector<InstanceSpec> read_instances(DomainKind domain, std::string_view text,
                                         const std::string& source = "instances");

}  // namespace kbest::domains
