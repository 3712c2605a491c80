#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "kbest/core/search_space.hpp"

namespace kbest::domains {

enum class GridVariant {
  Unit,    // 4-connected, every move costs 1
  Octile,  // 8-connected, straight 10, diagonal 14
};

/// A movingai benchmark map. Only '.' and 'G' are passable.
class GridMap {
 public:
  GridMap(int width, int height, std::vector<char> cells, std::string type = "octile");

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  const std::string& type() const noexcept { return type_; }
  char cell(int x, int y) const { return cells_[static_cast<std::size_t>(y) * width_ + x]; }
  bool in_bounds(int x, int y) const noexcept { return x >= 0 && y >= 0 && x < width_ && y < height_; }
  bool passable(int x, int y) const noexcept { return in_bounds(x, y) && passable_[index(x, y)]; }
  std::size_t passable_count() const noexcept;

  std::size_t index(int x, int y) const noexcept { return static_cast<std::size_t>(y) * width_ + x; }

 private:
  int width_;
  int height_;
  std::vector<char> cells_;
  std::vector<bool> passable_;
  std::string type_;
};

/// Throws ParseError; for row problems the line number points at the row.
GridMap parse_movingai_map(std::string_view text);
std::string emit_movingai_map(const GridMap& map);

struct Move {
  int x;
  int y;
  Cost cost;
};

/// Legal moves from (x, y). Without `no_corner_cutting`, a diagonal needs only
/// its target cell passable. Throws PreconditionError for a blocked origin.
std::vector<Move> grid_successors(const GridMap& map, int x, int y, GridVariant variant,
                                  bool no_corner_cutting = false);

/// Manhattan distance (Unit) or octile distance with 10/14 costs (Octile).
Cost grid_heuristic(int x, int y, int gx, int gy, GridVariant variant);

/// State key y * width + x.
class GridSpace : public SearchSpace {
 public:
  GridSpace(std::shared_ptr<const GridMap> map, GridVariant variant, int sx, int sy, int gx, int gy,
            bool no_corner_cutting = false);

  StateKey start() const override { return key(sx_, sy_); }
  StateKey goal() const override { return key(gx_, gy_); }
  void successors(StateKey state, std::vector<EdgeRef>& out) const override;
  bool has_heuristic() const override { return true; }
  Cost heuristic(StateKey state) const override;
  std::string render(StateKey state) const override;
  StateKey parse_state(std::string_view token) const override;

  StateKey key(int x, int y) const noexcept {
    return StateKey(static_cast<std::uint64_t>(y) * map_->width() + x);
  }
  const GridMap& map() const noexcept { return *map_; }

 private:
  std::shared_ptr<const GridMap> map_;
  GridVariant variant_;
  int sx_, sy_, gx_, gy_;
  bool no_corner_cutting_;
};

}  // namespace kbest::domains
