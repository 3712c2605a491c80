#include "kbest/domains/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "kbest/core/errors.hpp"

namespace kbest::domains {

GridMap::GridMap(int width, int height, std::vector<char> cells, std::string type)
    : width_(width), height_(height), cells_(std::move(cells)), type_(std::move(type)) {
  if (width <= 0 || height <= 0) throw PreconditionError("grid dimensions must be positive");
  if (cells_.size() != static_cast<std::size_t>(width) * height)
    throw PreconditionError("cell count does not match the grid dimensions");
  passable_.resize(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) passable_[i] = cells_[i] == '.' || cells_[i] == 'G';
}

std::size_t GridMap::passable_count() const noexcept {
  return static_cast<std::size_t>(std::count(passable_.begin(), passable_.end(), true));
}

namespace {

int header_value(std::string_view line, std::string_view key, std::size_t lineno) {
  if (line.substr(0, key.size()) != key || line.size() <= key.size() || line[key.size()] != ' ')
    throw ParseError("expected '" + std::string(key) + " <n>'", lineno);
  auto rest = line.substr(key.size() + 1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
  if (ec != std::errc{} || ptr != rest.data() + rest.size() || v <= 0)
    throw ParseError("bad " + std::string(key) + " value", lineno);
  return v;
}

}  // namespace

GridMap parse_movingai_map(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  if (lines.size() < 4) throw ParseError("truncated header", lines.size() + 1);
  if (lines[0].substr(0, 5) != "type ") throw ParseError("expected 'type <name>'", 1);
  const std::string type(lines[0].substr(5));
  const int height = header_value(lines[1], "height", 2);
  const int width = header_value(lines[2], "width", 3);
  if (lines[3] != "map") throw ParseError("expected 'map'", 4);
  std::vector<char> cells;
  cells.reserve(static_cast<std::size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    const std::size_t lineno = 5 + static_cast<std::size_t>(y);
    if (4 + static_cast<std::size_t>(y) >= lines.size())
      throw ParseError("missing row " + std::to_string(y), lineno);
    const auto row = lines[4 + y];
    if (row.size() != static_cast<std::size_t>(width))
      throw ParseError("row " + std::to_string(y) + " has " + std::to_string(row.size()) +
                           " cells, expected " + std::to_string(width),
                       lineno);
    cells.insert(cells.end(), row.begin(), row.end());
  }
  for (std::size_t i = 4 + height; i < lines.size(); ++i)
    if (!lines[i].empty()) throw ParseError("extra row beyond height", i + 1);
  return GridMap(width, height, std::move(cells), type);
}

std::string emit_movingai_map(const GridMap& map) {
  std::string out = "type " + map.type() + "\nheight " + std::to_string(map.height()) + "\nwidth " +
                    std::to_string(map.width()) + "\nmap\n";
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) out.push_back(map.cell(x, y));
    out.push_back('\n');
  }
  return out;
}

std::vector<Move> grid_successors(const GridMap& map, int x, int y, GridVariant variant,
                                  bool no_corner_cutting) {
  if (!map.passable(x, y))
    throw PreconditionError("cell (" + std::to_string(x) + "," + std::to_string(y) + ") is blocked");
  static constexpr int kStraight[4][2] = {{0, -1}, {1, 0}, {0, 1}, {-1, 0}};
  static constexpr int kDiagonal[4][2] = {{1, -1}, {1, 1}, {-1, 1}, {-1, -1}};
  std::vector<Move> out;
  const Cost straight = variant == GridVariant::Unit ? 1 : 10;
  for (auto [dx, dy] : kStraight)
    if (map.passable(x + dx, y + dy)) out.push_back({x + dx, y + dy, straight});
  if (variant == GridVariant::Octile) {
    for (auto [dx, dy] : kDiagonal) {
      if (!map.passable(x + dx, y + dy)) continue;
      if (no_corner_cutting && (!map.passable(x + dx, y) || !map.passable(x, y + dy))) continue;
      out.push_back({x + dx, y + dy, 14});
    }
  }
  return out;
}

Cost grid_heuristic(int x, int y, int gx, int gy, GridVariant variant) {
  const Cost dx = std::abs(x - gx);
  const Cost dy = std::abs(y - gy);
  if (variant == GridVariant::Unit) return dx + dy;
  const Cost lo = std::min(dx, dy);
  const Cost hi = std::max(dx, dy);
  return 14 * lo + 10 * (hi - lo);
}

GridSpace::GridSpace(std::shared_ptr<const GridMap> map, GridVariant variant, int sx, int sy, int gx,
                     int gy, bool no_corner_cutting)
    : map_(std::move(map)),
      variant_(variant),
      sx_(sx),
      sy_(sy),
      gx_(gx),
      gy_(gy),
      no_corner_cutting_(no_corner_cutting) {
  if (!map_->passable(sx, sy)) throw PreconditionError("start cell is blocked");
  if (!map_->passable(gx, gy)) throw PreconditionError("goal cell is blocked");
}

void GridSpace::successors(StateKey state, std::vector<EdgeRef>& out) const {
  const int x = static_cast<int>(state.value() % map_->width());
  const int y = static_cast<int>(state.value() / map_->width());
  out.clear();
  for (const Move& m : grid_successors(*map_, x, y, variant_, no_corner_cutting_))
    out.push_back(EdgeRef{state, key(m.x, m.y), m.cost, 0});
}

Cost GridSpace::heuristic(StateKey state) const {
  const int x = static_cast<int>(state.value() % map_->width());
  const int y = static_cast<int>(state.value() / map_->width());
  return grid_heuristic(x, y, gx_, gy_, variant_);
}

std::string GridSpace::render(StateKey state) const {
  return std::to_string(state.value() % map_->width()) + "," +
         std::to_string(state.value() / map_->width());
}

StateKey GridSpace::parse_state(std::string_view token) const {
  const auto comma = token.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected 'x,y', got '" + std::string(token) + "'", 0);
  const auto x = SearchSpace::parse_state(token.substr(0, comma)).value();
  const auto y = SearchSpace::parse_state(token.substr(comma + 1)).value();
  if (!map_->in_bounds(static_cast<int>(x), static_cast<int>(y)))
    throw ParseError("cell out of bounds: " + std::string(token), 0);
  return key(static_cast<int>(x), static_cast<int>(y));
}

}  // namespace kbest::domains
