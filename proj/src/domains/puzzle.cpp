#include "kbest/domains/puzzle.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "kbest/core/errors.hpp"

namespace kbest::domains {

Board puzzle_goal(int n) {
  Board b(static_cast<std::size_t>(n) * n);
  std::iota(b.begin(), b.end(), 0);
  return b;
}

int board_side(const Board& b) {
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(b.size()))));
  return n * n == static_cast<int>(b.size()) ? n : 0;
}

bool is_valid_board(const Board& b) {
  const int n = board_side(b);
  if (n < 2 || n > 4) return false;
  std::vector<bool> seen(b.size(), false);
  for (int v : b) {
    if (v < 0 || v >= static_cast<int>(b.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

StateKey pack_board(const Board& b) {
  if (!is_valid_board(b)) throw PreconditionError("invalid puzzle board");
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < b.size(); ++i) key |= static_cast<std::uint64_t>(b[i]) << (4 * i);
  return StateKey(key);
}

Board unpack_board(StateKey key, int n) {
  Board b(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = static_cast<int>((key.value() >> (4 * i)) & 0xF);
  return b;
}

namespace {

constexpr int kDir[4][2] = {{0, -1}, {1, 0}, {0, 1}, {-1, 0}};

std::vector<int> cells_of(const Board& goal) {
  std::vector<int> cell(goal.size());
  for (std::size_t i = 0; i < goal.size(); ++i) cell[goal[i]] = static_cast<int>(i);
  return cell;
}

Cost manhattan(const Board& b, const std::vector<int>& goal_cell, int n, CostVariant variant) {
  Cost h = 0;
  for (int i = 0; i < static_cast<int>(b.size()); ++i) {
    const int t = b[i];
    if (t == 0) continue;
    const Cost d = std::abs(i % n - goal_cell[t] % n) + std::abs(i / n - goal_cell[t] / n);
    h += variant == CostVariant::Unit ? d : d * t;
  }
  return h;
}

}  // namespace

std::vector<Slide> puzzle_successors(const Board& b, CostVariant variant) {
  if (!is_valid_board(b)) throw PreconditionError("invalid puzzle board");
  const int n = board_side(b);
  int blank = 0;
  while (b[blank] != 0) ++blank;
  const int bx = blank % n;
  const int by = blank / n;
  std::vector<Slide> out;
  for (auto [dx, dy] : kDir) {
    const int x = bx + dx;
    const int y = by + dy;
    if (x < 0 || y < 0 || x >= n || y >= n) continue;
    Slide s{b, 0, b[y * n + x]};
    std::swap(s.state[blank], s.state[y * n + x]);
    s.cost = variant == CostVariant::Unit ? 1 : s.tile;
    out.push_back(std::move(s));
  }
  return out;
}

Cost puzzle_heuristic(const Board& b, CostVariant variant) {
  return puzzle_heuristic(b, puzzle_goal(board_side(b)), variant);
}

Cost puzzle_heuristic(const Board& b, const Board& goal, CostVariant variant) {
  if (!is_valid_board(b) || !is_valid_board(goal) || b.size() != goal.size())
    throw PreconditionError("invalid puzzle board");
  return manhattan(b, cells_of(goal), board_side(b), variant);
}

bool puzzle_solvable(const Board& b) { return puzzle_solvable(b, puzzle_goal(board_side(b))); }

bool puzzle_solvable(const Board& b, const Board& goal) {
  if (!is_valid_board(b) || !is_valid_board(goal) || b.size() != goal.size())
    throw PreconditionError("invalid puzzle board");
  const int n = board_side(b);
  const auto goal_cell = cells_of(goal);
  // Permutation of cells: cell i holds the tile that belongs at goal_cell[b[i]].
  std::vector<int> perm(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) perm[i] = goal_cell[b[i]];
  std::vector<bool> done(b.size(), false);
  int transpositions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (done[i]) continue;
    int len = 0;
    for (std::size_t j = i; !done[j]; j = perm[j]) {
      done[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  int blank = 0;
  while (b[blank] != 0) ++blank;
  const int g = goal_cell[0];
  const int blank_distance = std::abs(blank % n - g % n) + std::abs(blank / n - g / n);
  return transpositions % 2 == blank_distance % 2;
}

PuzzleSpace::PuzzleSpace(Board start, Board goal, CostVariant variant)
    : start_(std::move(start)), goal_(std::move(goal)), variant_(variant) {
  if (!is_valid_board(start_) || !is_valid_board(goal_) || start_.size() != goal_.size())
    throw PreconditionError("puzzle start and goal must be valid boards of the same size");
  side_ = board_side(start_);
  goal_cell_ = cells_of(goal_);
}

void PuzzleSpace::successors(StateKey state, std::vector<EdgeRef>& out) const {
  out.clear();
  const std::uint64_t v = state.value();
  const int cells = side_ * side_;
  int blank = 0;
  while (blank < cells && ((v >> (4 * blank)) & 0xF) != 0) ++blank;
  const int bx = blank % side_;
  const int by = blank / side_;
  for (auto [dx, dy] : kDir) {
    const int x = bx + dx;
    const int y = by + dy;
    if (x < 0 || y < 0 || x >= side_ || y >= side_) continue;
    const int cell = y * side_ + x;
    const std::uint64_t tile = (v >> (4 * cell)) & 0xF;
    // The blank is 0, so moving the tile is clearing its cell and setting the blank's.
    const std::uint64_t next = (v & ~(std::uint64_t{0xF} << (4 * cell))) | (tile << (4 * blank));
    const Cost cost = variant_ == CostVariant::Unit ? 1 : static_cast<Cost>(tile);
    out.push_back(EdgeRef{state, StateKey(next), cost, 0});
  }
}

Cost PuzzleSpace::heuristic(StateKey state) const {
  return manhattan(unpack_board(state, side_), goal_cell_, side_, variant_);
}

std::string PuzzleSpace::render(StateKey state) const {
  return render_sequence(unpack_board(state, side_));
}

StateKey PuzzleSpace::parse_state(std::string_view token) const {
  const auto b = parse_sequence(token);
  if (static_cast<int>(b.size()) != side_ * side_ || !is_valid_board(b))
    throw ParseError("not a " + std::to_string(side_) + "x" + std::to_string(side_) + " board: " +
                         std::string(token),
                     0);
  return pack_board(b);
}

}  // namespace kbest::domains
