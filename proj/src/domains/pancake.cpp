#include "kbest/domains/pancake.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "kbest/core/errors.hpp"

namespace kbest::domains {

bool is_permutation_of_1_to_n(const Permutation& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

StateKey pack_pancake(const Permutation& p) {
  if (p.size() < 2 || p.size() > 16) throw PreconditionError("pancake size must be within 2..16");
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    key |= static_cast<std::uint64_t>(p[i] - 1) << (4 * i);
  return StateKey(key);
}

Permutation unpack_pancake(StateKey key, int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = static_cast<int>((key.value() >> (4 * i)) & 0xF) + 1;
  return p;
}

std::vector<Flip> pancake_successors(const Permutation& p, CostVariant variant) {
  std::vector<Flip> out;
  const int n = static_cast<int>(p.size());
  for (int l = 2; l <= n; ++l) {
    Flip f{p, variant == CostVariant::Unit ? 1 : p[l - 1], l};
    std::reverse(f.state.begin(), f.state.begin() + l);
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

std::vector<int> positions_of(const Permutation& goal) {
  std::vector<int> pos(goal.size() + 2, 0);
  for (std::size_t i = 0; i < goal.size(); ++i) pos[goal[i]] = static_cast<int>(i);
  pos[goal.size() + 1] = static_cast<int>(goal.size());
  return pos;
}

Cost gap_with_positions(const Permutation& p, const std::vector<int>& goal_pos, CostVariant variant) {
  const int n = static_cast<int>(p.size());
  Cost h = 0;
  for (int i = 0; i < n; ++i) {
    const int a = p[i];
    const int b = i + 1 < n ? p[i + 1] : n + 1;
    if (std::abs(goal_pos[a] - goal_pos[b]) != 1) h += variant == CostVariant::Unit ? 1 : std::min(a, b);
  }
  return h;
}

}  // namespace

Cost gap_heuristic(const Permutation& p, CostVariant variant) {
  Permutation identity(p.size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i) + 1;
  return gap_heuristic(p, identity, variant);
}

Cost gap_heuristic(const Permutation& p, const Permutation& goal, CostVariant variant) {
  if (!is_permutation_of_1_to_n(p) || !is_permutation_of_1_to_n(goal) || p.size() != goal.size())
    throw PreconditionError("gap heuristic needs two permutations of the same size");
  return gap_with_positions(p, positions_of(goal), variant);
}

PancakeSpace::PancakeSpace(Permutation start, Permutation goal, CostVariant variant)
    : start_(std::move(start)), goal_(std::move(goal)), variant_(variant) {
  if (!is_permutation_of_1_to_n(start_) || !is_permutation_of_1_to_n(goal_) ||
      start_.size() != goal_.size())
    throw PreconditionError("pancake start and goal must be permutations of 1..N");
  if (start_.size() < 2 || start_.size() > 16) throw PreconditionError("pancake size must be within 2..16");
  goal_pos_ = positions_of(goal_);
}

void PancakeSpace::successors(StateKey state, std::vector<EdgeRef>& out) const {
  out.clear();
  const int n = size();
  const std::uint64_t v = state.value();
  for (int l = 2; l <= n; ++l) {
    std::uint64_t next = v;
    for (int i = 0; i < l; ++i) {
      const std::uint64_t disc = (v >> (4 * i)) & 0xF;
      const int j = l - 1 - i;
      next &= ~(std::uint64_t{0xF} << (4 * j));
      next |= disc << (4 * j);
    }
    const Cost cost = variant_ == CostVariant::Unit ? 1 : static_cast<Cost>(((v >> (4 * (l - 1))) & 0xF) + 1);
    out.push_back(EdgeRef{state, StateKey(next), cost, 0});
  }
}

Cost PancakeSpace::heuristic(StateKey state) const {
  return gap_with_positions(unpack_pancake(state, size()), goal_pos_, variant_);
}

std::string PancakeSpace::render(StateKey state) const {
  return render_sequence(unpack_pancake(state, size()));
}

StateKey PancakeSpace::parse_state(std::string_view token) const {
  const auto p = parse_sequence(token);
  if (static_cast<int>(p.size()) != size() || !is_permutation_of_1_to_n(p))
    throw ParseError("not a permutation of 1.." + std::to_string(size()) + ": " + std::string(token), 0);
  return pack_pancake(p);
}

std::string render_sequence(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<int> parse_sequence(std::string_view token) {
  std::vector<int> out;
  while (true) {
    const auto comma = token.find(',');
    const auto part = token.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
      throw ParseError("bad sequence element '" + std::string(part) + "'", 0);
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    token.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace kbest::domains
