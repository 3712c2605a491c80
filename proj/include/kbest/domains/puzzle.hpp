#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kbest/domains/pancake.hpp"

namespace kbest::domains {

/// Row-major N x N board holding 0..N*N-1, 0 being the blank; 2 <= N <= 4.
using Board = std::vector<int>;

/// 0, 1, ..., N*N-1: blank in the upper-left corner.
Board puzzle_goal(int n);
bool is_valid_board(const Board& b);
int board_side(const Board& b);

StateKey pack_board(const Board& b);
Board unpack_board(StateKey key, int n);

struct Slide {
  Board state;
  Cost cost;
  int tile;
};

/// Blank moves up, right, down, left (those in bounds). Heavy cost is the
/// value of the tile that moves.
std::vector<Slide> puzzle_successors(const Board& b, CostVariant variant);

/// Sum over tiles of Manhattan distance to the goal cell, weighted by the
/// tile value for Heavy. The goal defaults to puzzle_goal.
Cost puzzle_heuristic(const Board& b, CostVariant variant);
Cost puzzle_heuristic(const Board& b, const Board& goal, CostVariant variant);

/// Whether `b` can reach `goal` (default puzzle_goal): the parity of the cell
/// permutation must match the parity of the blank's Manhattan displacement.
bool puzzle_solvable(const Board& b);
bool puzzle_solvable(const Board& b, const Board& goal);

class PuzzleSpace : public SearchSpace {
 public:
  PuzzleSpace(Board start, Board goal, CostVariant variant);

  StateKey start() const override { return pack_board(start_); }
  StateKey goal() const override { return pack_board(goal_); }
  void successors(StateKey state, std::vector<EdgeRef>& out) const override;
  bool has_heuristic() const override { return true; }
  Cost heuristic(StateKey state) const override;
  std::string render(StateKey state) const override;
  StateKey parse_state(std::string_view token) const override;

  int side() const noexcept { return side_; }

 private:
  Board start_;
  Board goal_;
  CostVariant variant_;
  int side_;
  std::vector<int> goal_cell_;  // goal_cell_[tile] = cell index in the goal
};

}  // namespace kbest::domains
