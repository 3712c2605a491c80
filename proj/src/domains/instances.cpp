#include "kbest/domains/instances.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <filesystem>
#include <limits>
#include <sstream>

#include "kbest/core/errors.hpp"
#include "kbest/domains/dimacs.hpp"

namespace kbest::domains {

std::string_view to_string(DomainKind d) {
  switch (d) {
    case DomainKind::Roadmap: return "roadmap";
    case DomainKind::Grid: return "grid";
    case DomainKind::Pancake: return "pancake";
    case DomainKind::Puzzle: return "puzzle";
  }
  return "?";
}

DomainKind parse_domain(std::string_view s) {
  if (s == "roadmap") return DomainKind::Roadmap;
  if (s == "grid") return DomainKind::Grid;
  if (s == "pancake") return DomainKind::Pancake;
  if (s == "puzzle") return DomainKind::Puzzle;
  throw ConfigError("unknown domain '" + std::string(s) + "'");
}

void check_variant(DomainKind d, std::string_view variant) {
  const bool ok = variant == "unit" || (d == DomainKind::Roadmap && variant == "dimacs") ||
                  (d == DomainKind::Grid && variant == "octile") ||
                  ((d == DomainKind::Pancake || d == DomainKind::Puzzle) && variant == "heavy");
  if (!ok)
    throw ConfigError("unknown variant '" + std::string(variant) + "' for domain " +
                      std::string(to_string(d)));
}

namespace {

GridVariant grid_variant(const std::string& v) {
  return v == "unit" ? GridVariant::Unit : GridVariant::Octile;
}

CostVariant cost_variant(const std::string& v) {
  return v == "unit" ? CostVariant::Unit : CostVariant::Heavy;
}

}  // namespace

DomainSetup load_domain(DomainKind kind, std::string variant, const std::string& input,
                        const std::string& coords, bool no_corner_cutting) {
  check_variant(kind, variant);
  DomainSetup s;
  s.kind = kind;
  s.variant = std::move(variant);
  s.no_corner_cutting = no_corner_cutting;
  switch (kind) {
    case DomainKind::Roadmap: {
      if (input.empty()) throw ConfigError("roadmap needs a .gr input file");
      auto g = std::make_shared<ExplicitGraph>(parse_dimacs_gr(read_text_file(input)));
      std::string co = coords;
      if (co.empty()) {
        std::filesystem::path p(input);
        p.replace_extension(".co");
        if (std::filesystem::exists(p)) co = p.string();
      }
      if (!co.empty()) parse_dimacs_co(read_text_file(co), *g);
      if (g->has_coords()) s.scale = calibrate_heuristic_scale(*g);
      s.unit_graph = std::make_shared<ExplicitGraph>(g->with_unit_weights());
      s.graph = std::move(g);
      break;
    }
    case DomainKind::Grid:
      if (input.empty()) throw ConfigError("grid needs a .map input file");
      s.grid = std::make_shared<GridMap>(parse_movingai_map(read_text_file(input)));
      break;
    case DomainKind::Pancake:
    case DomainKind::Puzzle:
      break;
  }
  return s;
}

std::unique_ptr<SearchSpace> make_space(const DomainSetup& setup, const InstanceSpec& in) {
  if (in.domain != setup.kind) throw ConfigError("instance domain differs from the loaded domain");
  switch (setup.kind) {
    case DomainKind::Roadmap: {
      if (in.start.size() != 1 || in.goal.size() != 1) throw ConfigError("roadmap instance needs s and t");
      const auto s = static_cast<std::uint32_t>(in.start[0]);
      const auto t = static_cast<std::uint32_t>(in.goal[0]);
      if (setup.variant == "unit") return std::make_unique<GraphSpace>(setup.unit_graph, s, t);
      return std::make_unique<GraphSpace>(setup.graph, s, t,
                                          haversine_heuristic(setup.graph, t, setup.scale));
    }
    case DomainKind::Grid:
      if (in.start.size() != 2 || in.goal.size() != 2) throw ConfigError("grid instance needs sx sy tx ty");
      return std::make_unique<GridSpace>(setup.grid, grid_variant(setup.variant), in.start[0],
                                         in.start[1], in.goal[0], in.goal[1], setup.no_corner_cutting);
    case DomainKind::Pancake:
      return std::make_unique<PancakeSpace>(in.start, in.goal, cost_variant(setup.variant));
    case DomainKind::Puzzle:
      return std::make_unique<PuzzleSpace>(in.start, in.goal, cost_variant(setup.variant));
  }
  throw ConfigError("unknown domain");
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw PreconditionError("empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

InstanceGenerator::InstanceGenerator(const DomainSetup& setup, GenParams params)
    : setup_(setup), params_(params) {
  if (setup.kind != DomainKind::Grid) return;
  const GridMap& m = *setup.grid;
  for (int y = 0; y < m.height(); ++y)
    for (int x = 0; x < m.width(); ++x)
      if (m.passable(x, y)) passable_.push_back(static_cast<std::uint32_t>(m.index(x, y)));
  // Moves are symmetric, so undirected components decide reachability.
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  component_.assign(static_cast<std::size_t>(m.width()) * m.height(), kNone);
  std::uint32_t label = 0;
  std::deque<std::uint32_t> queue;
  for (std::uint32_t c : passable_) {
    if (component_[c] != kNone) continue;
    component_[c] = label;
    queue.push_back(c);
    while (!queue.empty()) {
      const std::uint32_t cur = queue.front();
      queue.pop_front();
      const int x = static_cast<int>(cur % m.width());
      const int y = static_cast<int>(cur / m.width());
      for (const Move& mv : grid_successors(m, x, y, grid_variant(setup.variant), setup.no_corner_cutting)) {
        const auto next = static_cast<std::uint32_t>(m.index(mv.x, mv.y));
        if (component_[next] == kNone) {
          component_[next] = label;
          queue.push_back(next);
        }
      }
    }
    ++label;
  }
}

InstanceSpec InstanceGenerator::generate(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  InstanceSpec out;
  switch (setup_.kind) {
    case DomainKind::Roadmap: out = roadmap(rng); break;
    case DomainKind::Grid: out = grid(rng); break;
    case DomainKind::Pancake: out = pancake(rng); break;
    case DomainKind::Puzzle: out = puzzle(rng); break;
  }
  out.domain = setup_.kind;
  out.seed = seed;
  out.source = "seed=" + std::to_string(seed);
  return out;
}

std::vector<InstanceSpec> InstanceGenerator::generate_many(std::uint64_t first_seed,
                                                           std::size_t count) const {
  std::vector<InstanceSpec> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(generate(first_seed + i));
  return out;
}

namespace {

[[noreturn]] void budget_exceeded(std::string_view domain, std::string_view hint) {
  throw ConfigError("no " + std::string(domain) + " instance passed the filter within the attempt budget; " +
                    std::string(hint));
}

bool reachable(const ExplicitGraph& g, std::uint32_t s, std::uint32_t t) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::uint32_t> q{s};
  seen[s] = true;
  while (!q.empty()) {
    const auto u = q.front();
    q.pop_front();
    if (u == t) return true;
    for (const EdgeRef& e : g.out_edges(u)) {
      const auto v = static_cast<std::uint32_t>(e.target.value());
      if (!seen[v]) {
        seen[v] = true;
        q.push_back(v);
      }
    }
  }
  return false;
}

}  // namespace

InstanceSpec InstanceGenerator::roadmap(std::mt19937_64& rng) const {
  const ExplicitGraph& g = *setup_.graph;
  if (!g.has_coords()) throw ConfigError("roadmap generation needs coordinates (.co file)");
  const auto n = g.vertex_count();
  const double min_m = params_.min_km * 1000.0;
  for (std::size_t attempt = 0; attempt < params_.budget; ++attempt) {
    const auto s = static_cast<std::uint32_t>(uniform_below(rng, n));
    const auto t = static_cast<std::uint32_t>(uniform_below(rng, n));
    if (s == t) continue;
    if (static_cast<double>(haversine_micro(g.coords()[s], g.coords()[t])) < min_m) continue;
    if (!reachable(g, s, t)) continue;
    InstanceSpec out;
    out.start = {static_cast<int>(s)};
    out.goal = {static_cast<int>(t)};
    return out;
  }
  budget_exceeded("roadmap", "lower --min-km");
}

InstanceSpec InstanceGenerator::grid(std::mt19937_64& rng) const {
  const GridMap& m = *setup_.grid;
  const GridVariant v = grid_variant(setup_.variant);
  if (passable_.size() < 2) throw ConfigError("grid map has fewer than two passable cells");
  const Cost h_max = grid_heuristic(0, 0, m.width() - 1, m.height() - 1, v);
  const double threshold = params_.min_frac * static_cast<double>(h_max) - 1e-9;
  for (std::size_t attempt = 0; attempt < params_.budget; ++attempt) {
    const auto a = passable_[uniform_below(rng, passable_.size())];
    const auto b = passable_[uniform_below(rng, passable_.size())];
    if (a == b || component_[a] != component_[b]) continue;
    const int sx = static_cast<int>(a % m.width()), sy = static_cast<int>(a / m.width());
    const int tx = static_cast<int>(b % m.width()), ty = static_cast<int>(b / m.width());
    if (static_cast<double>(grid_heuristic(sx, sy, tx, ty, v)) < threshold) continue;
    InstanceSpec out;
    out.start = {sx, sy};
    out.goal = {tx, ty};
    return out;
  }
  budget_exceeded("grid", "lower --min-frac");
}

InstanceSpec InstanceGenerator::pancake(std::mt19937_64& rng) const {
  const int n = setup_.size;
  if (n < 2 || n > 16) throw ConfigError("pancake size must be within 2..16");
  const int min_gap = params_.min_gap.value_or(n - 2);
  Permutation goal(n);
  for (int i = 0; i < n; ++i) goal[i] = i + 1;
  for (std::size_t attempt = 0; attempt < params_.budget; ++attempt) {
    Permutation p = goal;
    for (int i = n - 1; i > 0; --i)
      std::swap(p[i], p[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    if (p == goal || gap_heuristic(p, CostVariant::Unit) < min_gap) continue;
    InstanceSpec out;
    out.start = std::move(p);
    out.goal = goal;
    return out;
  }
  budget_exceeded("pancake", "lower --min-gap");
}

InstanceSpec InstanceGenerator::puzzle(std::mt19937_64& rng) const {
  const int n = setup_.size;
  if (n < 2 || n > 4) throw ConfigError("puzzle side must be within 2..4");
  const Board goal = puzzle_goal(n);
  Board b = goal;
  int blank = 0;
  int previous = -1;
  int steps = 0;
  for (std::size_t attempt = 0; attempt < params_.budget; ++attempt) {
    if (steps >= params_.walk_length && b != goal) break;
    std::vector<int> options;
    const int bx = blank % n, by = blank / n;
    if (by > 0) options.push_back(blank - n);
    if (bx < n - 1) options.push_back(blank + 1);
    if (by < n - 1) options.push_back(blank + n);
    if (bx > 0) options.push_back(blank - 1);
    // Never undo the previous move.
    std::erase(options, previous);
    const int next = options[uniform_below(rng, options.size())];
    std::swap(b[blank], b[next]);
    previous = blank;
    blank = next;
    ++steps;
  }
  if (b == goal) budget_exceeded("puzzle", "raise the walk length");
  InstanceSpec out;
  out.start = std::move(b);
  out.goal = goal;
  return out;
}

std::string format_instance(const InstanceSpec& in) {
  std::ostringstream os;
  auto join = [&](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  };
  switch (in.domain) {
    case DomainKind::Roadmap: os << in.start.at(0) + 1 << ' ' << in.goal.at(0) + 1; break;
    case DomainKind::Grid: os << in.start.at(0) << ' ' << in.start.at(1) << ' ' << in.goal.at(0) << ' ' << in.goal.at(1); break;
    case DomainKind::Pancake:
    case DomainKind::Puzzle:
      join(in.start);
      os << " | ";
      join(in.goal);
      break;
  }
  os << " # seed=" << in.seed;
  return os.str();
}

std::string write_instances(const std::vector<InstanceSpec>& instances) {
  std::string out;
  for (const auto& in : instances) out += format_instance(in) + "\n";
  return out;
}

namespace {

std::vector<int> parse_ints(std::string_view text, std::size_t lineno) {
  std::vector<int> out;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'", lineno);
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<InstanceSpec> read_instances(DomainKind domain, std::string_view text,
                                         const std::string& source) {
  std::vector<InstanceSpec> out;
  std::size_t lineno = 0;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    ++lineno;
    InstanceSpec in;
    in.domain = domain;
    in.source = source + ":" + std::to_string(lineno);
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      const auto comment = line.substr(hash + 1);
      if (const auto at = comment.find("seed="); at != std::string::npos)
        in.seed = std::stoull(comment.substr(at + 5));
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    switch (domain) {
      case DomainKind::Roadmap: {
        const auto v = parse_ints(line, lineno);
        if (v.size() != 2 || v[0] < 1 || v[1] < 1) throw ParseError("expected 's t' (1-based)", lineno);
        in.start = {v[0] - 1};
        in.goal = {v[1] - 1};
        break;
      }
      case DomainKind::Grid: {
        const auto v = parse_ints(line, lineno);
        if (v.size() != 4) throw ParseError("expected 'sx sy tx ty'", lineno);
        in.start = {v[0], v[1]};
        in.goal = {v[2], v[3]};
        break;
      }
      case DomainKind::Pancake:
      case DomainKind::Puzzle: {
        const auto bar = line.find('|');
        if (bar == std::string::npos) throw ParseError("expected 'start | goal'", lineno);
        in.start = parse_ints(std::string_view(line).substr(0, bar), lineno);
        in.goal = parse_ints(std::string_view(line).substr(bar + 1), lineno);
        const bool valid = domain == DomainKind::Pancake
                               ? is_permutation_of_1_to_n(in.start) && is_permutation_of_1_to_n(in.goal)
                               : is_valid_board(in.start) && is_valid_board(in.goal);
        if (!valid || in.start.size() != in.goal.size()) throw ParseError("invalid start or goal", lineno);
        if (domain == DomainKind::Puzzle && !puzzle_solvable(in.start, in.goal))
          throw ParseError("goal is not reachable from start", lineno);
        break;
      }
    }
    if (in.start == in.goal) throw ParseError("start equals goal", lineno);
    out.push_back(std::move(in));
  }
  return out;
}

}  // namespace kbest::domains
