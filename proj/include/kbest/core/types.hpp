#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace kbest {

/// Exact integer path cost. Floating point costs are never used.
using Cost = std::int64_t;

/// Opaque identity of a vertex. Domains pack their state into the 64-bit value
/// (vertex id, grid cell index, nibble-packed permutation).
class StateKey {
 public:
  constexpr StateKey() = default;
  constexpr explicit StateKey(std::uint64_t value) : value_(value) {}

  constexpr std::uint64_t value() const noexcept { return value_; }

  friend constexpr auto operator<=>(StateKey, StateKey) = default;

 private:
  std::uint64_t value_ = 0;
};

struct EdgeRef {
  StateKey source;
  StateKey target;
  Cost weight = 0;
  // Distinguishes parallel edges between the same pair of states.
  std::uint32_t serial = 0;

  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// A path from its first state to its last. Need not be simple.
struct Path {
  std::vector<StateKey> states;
  std::vector<EdgeRef> edges;
  Cost cost = 0;

  friend bool operator==(const Path& a, const Path& b) {
    return a.cost == b.cost && a.states == b.states && a.edges == b.edges;
  }
};

/// Sum of edge weights. Throws StructureError naming the first bad index when
/// the edges are not linked to the state sequence.
Cost path_cost(const Path& path);

/// Builds a path from a start state and an edge sequence, filling states and cost.
Path make_path(StateKey start, std::vector<EdgeRef> edges);

std::size_t hash_value(const EdgeRef& e) noexcept;
std::size_t hash_value(const Path& p) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t v) noexcept {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace kbest

template <>
struct std::hash<kbest::StateKey> {
  std::size_t operator()(kbest::StateKey k) const noexcept {
    // splitmix64 finalizer; packed permutations have poor low bits otherwise
    std::uint64_t z = k.value() + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(z ^ (z >> 31));
  }
};

template <>
struct std::hash<kbest::EdgeRef> {
  std::size_t operator()(const kbest::EdgeRef& e) const noexcept { return kbest::hash_value(e); }
};

template <>
struct std::hash<kbest::Path> {
  std::size_t operator()(const kbest::Path& p) const noexcept { return kbest::hash_value(p); }
};
