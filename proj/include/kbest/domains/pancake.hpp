#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kbest/core/search_space.hpp"

namespace kbest::domains {

enum class CostVariant {
  Unit,
  Heavy,  // pancake: disc brought to the top; puzzle: tile moved
};

using Permutation = std::vector<int>;

/// Permutations of 1..N with 2 <= N <= 16, packed four bits per position.
StateKey pack_pancake(const Permutation& p);
Permutation unpack_pancake(StateKey key, int n);

struct Flip {
  Permutation state;
  Cost cost;
  int length;
};

/// Prefix reversals of length 2..N in that order.
std::vector<Flip> pancake_successors(const Permutation& p, CostVariant variant);

/// Gaps are adjacent positions (including the last disc and the plate N+1)
/// whose discs are not adjacent in the goal. Unit counts them, Heavy sums the
/// smaller disc of each gap. The goal defaults to the identity.
Cost gap_heuristic(const Permutation& p, CostVariant variant);
Cost gap_heuristic(const Permutation& p, const Permutation& goal, CostVariant variant);

bool is_permutation_of_1_to_n(const Permutation& p);

class PancakeSpace : public SearchSpace {
 public:
  PancakeSpace(Permutation start, Permutation goal, CostVariant variant);

  StateKey start() const override { return pack_pancake(start_); }
  StateKey goal() const override { return pack_pancake(goal_); }
  void successors(StateKey state, std::vector<EdgeRef>& out) const override;
  bool has_heuristic() const override { return true; }
  Cost heuristic(StateKey state) const override;
  std::string render(StateKey state) const override;
  StateKey parse_state(std::string_view token) const override;

  int size() const noexcept { return static_cast<int>(start_.size()); }

 private:
  Permutation start_;
  Permutation goal_;
  CostVariant variant_;
  // goal_pos_[d] = position of disc d in the goal, plate at N.
  std::vector<int> goal_pos_;
};

/// "a,b,c" rendering shared by the permutation domains.
std::string render_sequence(const std::vector<int>& values);
std::vector<int> parse_sequence(std::string_view token);

}  // namespace kbest::domains
