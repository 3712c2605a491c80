#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kbest/baselines/brute_force.hpp"
#include "kbest/baselines/equivalence.hpp"
#include "kbest/bench/experiment.hpp"
#include "kbest/core/errors.hpp"
#include "kbest/domains/dimacs.hpp"

using namespace kbest;

namespace {

struct DomainArgs {
  std::string domain;
  std::string variant;
  std::string input;
  std::string coords;
  bool no_corner_cutting = false;
  int size = 0;

  void attach(CLI::App* app) {
    app->add_option("--domain", domain, "roadmap | grid | pancake | puzzle")->required();
    app->add_option("--variant", variant, "roadmap: dimacs|unit, grid: unit|octile, pancake/puzzle: unit|heavy");
    app->add_option("--input", input, ".gr file (roadmap) or .map file (grid)");
    app->add_option("--coords", coords, ".co file for roadmap (defaults to the .gr sibling)");
    app->add_flag("--no-corner-cutting", no_corner_cutting, "octile diagonals need both side cells free");
    app->add_option("--size", size, "pancake N or puzzle side, for generation");
  }

  domains::DomainSetup load() const {
    const auto kind = domains::parse_domain(domain);
    std::string v = variant;
    if (v.empty()) v = kind == domains::DomainKind::Roadmap ? "dimacs" : "unit";
    auto setup = domains::load_domain(kind, v, input, coords, no_corner_cutting);
    setup.size = size;
    return setup;
  }
};

nlohmann::json row_json(const bench::ResultRow& r) {
  return {{"domain", r.domain},
          {"variant", r.variant},
          {"instance_id", r.instance_id},
          {"seed", r.seed},
          {"algorithm", r.algorithm},
          {"kappa", r.kappa},
          {"paths_found", r.paths_found},
          {"cost_min", r.cost_min},
          {"cost_max", r.cost_max},
          {"elapsed_seconds", r.elapsed_seconds},
          {"expansions", r.expansions},
          {"duplicate_pops", r.duplicate_pops},
          {"centroids_created", r.centroids_created},
          {"centroids_consumed", r.centroids_consumed},
          {"gb_insertions", r.gb_insertions},
          {"ledger_bytes_estimate", r.ledger_bytes_estimate},
          {"status", r.status}};
}

int solve(const DomainArgs& d, const std::string& instance, const std::string& algo, std::size_t k,
          const std::string& tiebreak, const std::string& paths_out, bool json) {
  const auto setup = d.load();
  const std::string text = std::filesystem::is_regular_file(instance) ? domains::read_text_file(instance) : instance;
  const auto instances = domains::read_instances(setup.kind, text, "instance");
  if (instances.empty()) throw ConfigError("no instance given");
  const auto space = domains::make_space(setup, instances.front());
  const auto algorithm = bench::parse_algorithm(algo);
  const auto out = bench::run_algorithm(*space, algorithm, k, bela::parse_tiebreak(tiebreak));

  bench::ResultRow row;
  row.domain = std::string(domains::to_string(setup.kind));
  row.variant = setup.variant;
  row.seed = instances.front().seed;
  row.algorithm = std::string(bench::to_string(algorithm));
  row.kappa = k;
  const auto& sol = out.result.solutions;
  const auto& m = out.result.metrics;
  row.paths_found = sol.size();
  if (!sol.empty()) {
    row.cost_min = sol.paths().front().cost;
    row.cost_max = sol.paths().back().cost;
  }
  row.elapsed_seconds = m.elapsed_seconds;
  row.expansions = m.expansions;
  row.duplicate_pops = m.duplicate_pops;
  row.centroids_created = m.centroids_created;
  row.centroids_consumed = m.centroids_consumed;
  row.gb_insertions = m.gb_insertions;
  row.ledger_bytes_estimate = ledger_bytes_estimate(m);
  row.status = out.capped ? "capped" : "ok";

  if (!paths_out.empty()) {
    std::ofstream os(paths_out);
    if (!os) throw ConfigError("cannot write " + paths_out);
    write_solution_set(os, sol, *space);
  }
  if (json) {
    auto j = row_json(row);
    if (paths_out.empty()) {
      j["paths"] = nlohmann::json::array();
      for (const Path& p : sol.paths()) j["paths"].push_back(format_path(p, *space));
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << bench::emit_csv({row});
  }
  return 0;
}

int gen(const DomainArgs& d, std::uint64_t seed, std::size_t count, domains::GenParams params,
        const std::string& out) {
  const auto setup = d.load();
  const domains::InstanceGenerator g(setup, params);
  const std::string text = domains::write_instances(g.generate_many(seed, count));
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out);
    if (!os) throw ConfigError("cannot write " + out);
    os << text;
  }
  return 0;
}

int run_bench(const std::string& config_path, std::size_t workers, const std::string& plot) {
  auto config = bench::parse_config(domains::read_text_file(config_path),
                                    std::filesystem::path(config_path).parent_path().string());
  if (workers) config.workers = workers;
  const auto rows = bench::run_experiment(config);
  std::cout << (plot.empty() ? bench::emit_csv(rows) : bench::emit_plot_data(rows, plot));
  return 0;
}

int verify(const DomainArgs& d, const std::string& instances_path, std::size_t k, std::size_t oracle_cap) {
  const auto setup = d.load();
  const auto instances =
      domains::read_instances(setup.kind, domains::read_text_file(instances_path), instances_path);
  std::size_t divergences = 0;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto space = domains::make_space(setup, instances[i]);
    SolutionSet oracle;
    try {
      oracle = baselines::brute_force_k_paths(*space, k, oracle_cap);
    } catch (const baselines::OracleOverflow& e) {
      std::cout << "instance " << i << ": skipped (" << e.what() << ")\n";
      ++skipped;
      continue;
    }
    for (auto a : {bench::Algorithm::Bela0, bench::Algorithm::BelaStar, bench::Algorithm::MAStar}) {
      const auto out = bench::run_algorithm(*space, a, k);
      const auto report = baselines::verify_equivalence(out.result.solutions, oracle);
      if (out.capped || !report.equal) {
        ++divergences;
        std::cout << "instance " << i << " " << bench::to_string(a) << ": "
                  << (out.capped ? "capped" : report.first_divergence) << '\n';
      }
    }
  }
  std::cout << "checked " << instances.size() - skipped << " instances, skipped " << skipped << ", "
            << divergences << " divergences\n";
  return divergences ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k shortest paths search engine and benchmark harness"};
  app.require_subcommand(1);

  DomainArgs solve_domain;
  std::string instance, algo = "bela0", tiebreak = "fifo", paths_out;
  std::size_t k = 1;
  bool json = false;
  auto* solve_cmd = app.add_subcommand("solve", "run one search and print its result row");
  solve_domain.attach(solve_cmd);
  solve_cmd->add_option("--instance", instance, "instance line or instance file (first line used)")->required();
  solve_cmd->add_option("--algo", algo, "bela0 | bela* | mdijkstra | ma*");
  solve_cmd->add_option("--k", k, "number of paths")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--tiebreak", tiebreak, "fifo | lifo | highg");
  solve_cmd->add_option("--paths-out", paths_out, "write the solution set to this file");
  solve_cmd->add_flag("--json", json, "print JSON instead of CSV");

  DomainArgs gen_domain;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  domains::GenParams params;
  std::string min_gap = "auto", out;
  auto* gen_cmd = app.add_subcommand("gen", "generate seeded instances");
  gen_domain.attach(gen_cmd);
  gen_cmd->add_option("--seed", seed, "first seed; instance i uses seed + i");
  gen_cmd->add_option("--count", count, "number of instances");
  gen_cmd->add_option("--min-km", params.min_km, "roadmap: minimum great-circle distance");
  gen_cmd->add_option("--min-frac", params.min_frac, "grid: minimum fraction of the corner-to-corner heuristic");
  gen_cmd->add_option("--min-gap", min_gap, "pancake: minimum GAP value, or auto for N-2");
  gen_cmd->add_option("--walk", params.walk_length, "puzzle: random moves applied to the goal");
  gen_cmd->add_option("--out", out, "output file (default stdout)");

  std::string config_path, plot;
  std::size_t workers = 0;
  auto* bench_cmd = app.add_subcommand("bench", "run an experiment config and print CSV");
  bench_cmd->add_option("--config", config_path, "key=value experiment file")->required();
  bench_cmd->add_option("--workers", workers, "parallel runs (overrides the config)");
  bench_cmd->add_option("--plot", plot, "print plot data for this metric instead of CSV");

  DomainArgs verify_domain;
  std::string instances_path;
  std::size_t verify_k = 10, oracle_cap = 2'000'000;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check against the brute-force oracle");
  verify_domain.attach(verify_cmd);
  verify_cmd->add_option("--instances", instances_path, "instance file")->required();
  verify_cmd->add_option("--k", verify_k, "number of paths")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--oracle-cap", oracle_cap, "oracle partial-path limit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return solve(solve_domain, instance, algo, k, tiebreak, paths_out, json);
    if (*gen_cmd) {
      if (min_gap != "auto") params.min_gap = std::stoi(min_gap);
      return gen(gen_domain, seed, count, params, out);
    }
    if (*bench_cmd) return run_bench(config_path, workers, plot);
    if (*verify_cmd) return verify(verify_domain, instances_path, verify_k, oracle_cap);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
