#include "kbest/bench/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <filesystem>
#include <mutex>
#include <sstream>
#include <thread>

#include "kbest/baselines/m_search.hpp"
#include "kbest/bench/schedule.hpp"
#include "kbest/core/errors.hpp"
#include "kbest/domains/dimacs.hpp"

namespace kbest::bench {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Bela0: return "bela0";
    case Algorithm::BelaStar: return "bela*";
    case Algorithm::MDijkstra: return "mdijkstra";
    case Algorithm::MAStar: return "ma*";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view s) {
  if (s == "bela0") return Algorithm::Bela0;
  if (s == "bela*") return Algorithm::BelaStar;
  if (s == "mdijkstra") return Algorithm::MDijkstra;
  if (s == "ma*") return Algorithm::MAStar;
  throw ConfigError("unknown algorithm '" + std::string(s) + "'");
}

RunOutcome run_algorithm(const SearchSpace& space, Algorithm algorithm, std::size_t kappa,
                         bela::TieBreak tiebreak, SearchLimits limits) {
  const bool starred = algorithm == Algorithm::BelaStar || algorithm == Algorithm::MAStar;
  const bool use_h = starred && space.has_heuristic();
  RunOutcome out;
  try {
    if (algorithm == Algorithm::Bela0 || algorithm == Algorithm::BelaStar) {
      bela::SearchOptions o;
      o.kappa = kappa;
      o.tiebreak = tiebreak;
      o.use_heuristic = use_h;
      o.limits = limits;
      out.result = bela::bela_search(space, o);
    } else {
      baselines::MSearchOptions o;
      o.kappa = kappa;
      o.use_heuristic = use_h;
      o.limits = limits;
      out.result = baselines::m_search(space, o);
    }
  } catch (const CappedRunError& e) {
    out.result = e.partial();
    out.capped = true;
  }
  return out;
}

void ExperimentConfig::validate() const {
  const auto kind = domains::parse_domain(domain);
  domains::check_variant(kind, variant);
  if (algorithms.empty()) throw ConfigError("no algorithms selected");
  if (kappas.empty()) throw ConfigError("empty kappa schedule");
  for (std::size_t i = 0; i < kappas.size(); ++i) {
    if (kappas[i] == 0) throw ConfigError("kappa values must be positive");
    if (i && kappas[i] <= kappas[i - 1]) throw ConfigError("kappa schedule must be strictly increasing");
  }
  if (instances.empty() && seeds.empty()) throw ConfigError("no instance source: give instances or seeds");
  if (!instances.empty() && !seeds.empty()) throw ConfigError("give either instances or seeds, not both");
  if (repetitions == 0) throw ConfigError("repetitions must be at least 1");
  if (workers == 0) throw ConfigError("workers must be at least 1");
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T number(const std::string& key, const std::string& value) {
  T v{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty())
    throw ConfigError("bad value for " + key + ": '" + value + "'");
  return v;
}

bool boolean(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("bad boolean for " + key + ": '" + value + "'");
}

std::vector<std::string> list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string resolve_path(const std::string& base, const std::string& p) {
  if (p.empty() || base.empty() || std::filesystem::path(p).is_absolute()) return p;
  return (std::filesystem::path(base) / p).string();
}

}  // namespace

ExperimentConfig parse_config(std::string_view text, const std::string& base_dir) {
  ExperimentConfig c;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> count;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "domain") c.domain = value;
    else if (key == "variant") c.variant = value;
    else if (key == "input") c.input = resolve_path(base_dir, value);
    else if (key == "coords") c.coords = resolve_path(base_dir, value);
    else if (key == "no_corner_cutting") c.no_corner_cutting = boolean(key, value);
    else if (key == "size") c.size = number<int>(key, value);
    else if (key == "instances") c.instances = resolve_path(base_dir, value);
    else if (key == "seed") seed = number<std::uint64_t>(key, value);
    else if (key == "count") count = number<std::size_t>(key, value);
    else if (key == "seeds")
      for (const auto& s : list(value)) c.seeds.push_back(number<std::uint64_t>(key, s));
    else if (key == "min_km") c.gen.min_km = number<double>(key, value);
    else if (key == "min_frac") c.gen.min_frac = number<double>(key, value);
    else if (key == "min_gap") c.gen.min_gap = number<int>(key, value);
    else if (key == "walk_length") c.gen.walk_length = number<int>(key, value);
    else if (key == "algorithms")
      for (const auto& a : list(value)) c.algorithms.push_back(parse_algorithm(a));
    else if (key == "kappa") c.kappas = parse_kappa_schedule(value);
    else if (key == "max_expansions") c.limits.max_expansions = number<std::uint64_t>(key, value);
    else if (key == "max_generated") c.limits.max_generated = number<std::uint64_t>(key, value);
    else if (key == "max_seconds") c.limits.max_seconds = number<double>(key, value);
    else if (key == "tiebreak") c.tiebreak = bela::parse_tiebreak(value);
    else if (key == "repetitions") c.repetitions = number<std::size_t>(key, value);
    else if (key == "workers") c.workers = number<std::size_t>(key, value);
    else throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  if (seed || count) {
    if (!c.seeds.empty()) throw ConfigError("give either seeds or seed/count, not both");
    for (std::size_t i = 0; i < count.value_or(1); ++i) c.seeds.push_back(seed.value_or(1) + i);
  }
  return c;
}

ResolvedExperiment resolve(const ExperimentConfig& config) {
  config.validate();
  const auto kind = domains::parse_domain(config.domain);
  ResolvedExperiment r;
  r.setup = domains::load_domain(kind, config.variant, config.input, config.coords, config.no_corner_cutting);
  r.setup.size = config.size;
  if (!config.instances.empty()) {
    r.instances = domains::read_instances(kind, domains::read_text_file(config.instances), config.instances);
    if (r.instances.empty()) throw ConfigError("instance file " + config.instances + " is empty");
  } else {
    const domains::InstanceGenerator gen(r.setup, config.gen);
    for (std::uint64_t s : config.seeds) r.instances.push_back(gen.generate(s));
  }
  // Surface bad instances (blocked cells, out-of-range vertices) before any run.
  for (const auto& in : r.instances) {
    try {
      domains::make_space(r.setup, in);
    } catch (const std::exception& e) {
      throw ConfigError("instance " + in.source + ": " + e.what());
    }
  }
  return r;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
  const auto r = resolve(config);
  return run_experiment(config, r.setup, r.instances);
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& config, const domains::DomainSetup& setup,
                                      const std::vector<domains::InstanceSpec>& instances) {
  if (config.algorithms.empty()) throw ConfigError("no algorithms selected");
  if (config.kappas.empty()) throw ConfigError("empty kappa schedule");
  std::vector<std::unique_ptr<SearchSpace>> spaces;
  for (const auto& in : instances) spaces.push_back(domains::make_space(setup, in));

  struct Task {
    std::size_t instance;
    Algorithm algorithm;
    std::size_t kappa;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (Algorithm a : config.algorithms)
      for (std::size_t k : config.kappas)
        for (std::size_t rep = 0; rep < config.repetitions; ++rep) tasks.push_back({i, a, k});

  std::vector<ResultRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      try {
        const Task& task = tasks[t];
        const RunOutcome out =
            run_algorithm(*spaces[task.instance], task.algorithm, task.kappa, config.tiebreak, config.limits);
        const auto& sol = out.result.solutions;
        const auto& m = out.result.metrics;
        ResultRow& row = rows[t];
        row.domain = std::string(domains::to_string(setup.kind));
        row.variant = setup.variant;
        row.instance_id = task.instance;
        row.seed = instances[task.instance].seed;
        row.algorithm = std::string(to_string(task.algorithm));
        row.kappa = task.kappa;
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
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };
  const std::size_t n = std::min(config.workers, std::max<std::size_t>(tasks.size(), 1));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace kbest::bench
