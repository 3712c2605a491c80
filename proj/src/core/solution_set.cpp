#include "kbest/core/solution_set.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "kbest/core/errors.hpp"

namespace kbest {

bool SolutionSet::push(Path path) {
  if (!paths_.empty() && path.cost < paths_.back().cost)
    throw InvariantError("solution pushed out of order: cost " + std::to_string(path.cost) +
                         " after " + std::to_string(paths_.back().cost));
  if (contains(path)) return false;
  index_.emplace(hash_value(path), paths_.size());
  paths_.push_back(std::move(path));
  return true;
}

bool SolutionSet::contains(const Path& path) const {
  auto [lo, hi] = index_.equal_range(hash_value(path));
  for (auto it = lo; it != hi; ++it)
    if (paths_[it->second] == path) return true;
  return false;
}

std::vector<Cost> SolutionSet::costs() const {
  std::vector<Cost> out;
  out.reserve(paths_.size());
  for (const Path& p : paths_) out.push_back(p.cost);
  return out;
}

std::string format_path(const Path& path, const SearchSpace& space) {
  std::string out = std::to_string(path.cost);
  for (StateKey s : path.states) {
    out += ' ';
    out += space.render(s);
  }
  return out;
}

namespace {

// Picks one edge per hop so that the weights add up to `remaining`; prefers
// lower serials. `failed` memoizes (hop, remaining) pairs with no completion.
bool choose_edges(const std::vector<std::vector<EdgeRef>>& hops, std::size_t hop, Cost remaining,
                  std::vector<EdgeRef>& chosen, std::set<std::pair<std::size_t, Cost>>& failed) {
  if (hop == hops.size()) return remaining == 0;
  if (failed.count({hop, remaining})) return false;
  for (const EdgeRef& e : hops[hop]) {
    if (e.weight > remaining) continue;
    chosen.push_back(e);
    if (choose_edges(hops, hop + 1, remaining - e.weight, chosen, failed)) return true;
    chosen.pop_back();
  }
  failed.insert({hop, remaining});
  return false;
}

}  // namespace

Path parse_path(const std::string& line, const SearchSpace& space) {
  std::istringstream in(line);
  std::string token;
  if (!(in >> token)) throw ParseError("empty path line", 0);
  Cost cost = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), cost);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("bad path cost '" + token + "'", 0);

  std::vector<StateKey> states;
  while (in >> token) states.push_back(space.parse_state(token));
  if (states.empty()) throw ParseError("path has no states", 0);

  std::vector<std::vector<EdgeRef>> hops;
  std::vector<EdgeRef> succ;
  for (std::size_t i = 0; i + 1 < states.size(); ++i) {
    space.successors(states[i], succ);
    std::vector<EdgeRef> matching;
    for (const EdgeRef& e : succ)
      if (e.target == states[i + 1]) matching.push_back(e);
    if (matching.empty())
      throw ParseError("no edge " + space.render(states[i]) + " -> " + space.render(states[i + 1]),
                       0);
    std::sort(matching.begin(), matching.end(),
              [](const EdgeRef& a, const EdgeRef& b) { return a.serial < b.serial; });
    hops.push_back(std::move(matching));
  }

  std::vector<EdgeRef> chosen;
  std::set<std::pair<std::size_t, Cost>> failed;
  if (!choose_edges(hops, 0, cost, chosen, failed))
    throw ParseError("no edge sequence matches cost " + std::to_string(cost), 0);
  Path p = make_path(states.front(), std::move(chosen));
  return p;
}

void write_solution_set(std::ostream& os, const SolutionSet& set, const SearchSpace& space) {
  os << "k=" << set.size() << " complete=" << (set.complete() ? 1 : 0) << '\n';
  for (const Path& p : set.paths()) os << format_path(p, space) << '\n';
}

SolutionSet read_solution_set(std::istream& is, const SearchSpace& space) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("missing solution set header", 1);
  std::size_t k = 0;
  int complete = 0;
  if (std::sscanf(line.c_str(), "k=%zu complete=%d", &k, &complete) != 2 ||
      (complete != 0 && complete != 1))
    throw ParseError("bad solution set header '" + line + "'", 1);
  SolutionSet set;
  set.set_complete(complete == 1);
  std::size_t lineno = 1;
  while (set.size() < k && std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      set.push(parse_path(line, space));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (set.size() != k)
    throw ParseError("expected " + std::to_string(k) + " paths, read " + std::to_string(set.size()),
                     lineno);
  return set;
}

}  // namespace kbest
