#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_set>
#include <vector>

#include "kbest/core/types.hpp"

namespace kbest::bela {

/// An edge paired with the overall cost of the solution paths it stands for.
/// Identifies the class of solution paths of that cost whose first sidetrack
/// is `edge` (or, for goal centroids, that end with `edge`).
struct Centroid {
  EdgeRef edge;
  Cost total_cost = 0;

  friend bool operator==(const Centroid&, const Centroid&) = default;
};

/// Min-cost queue of centroids, FIFO among equal costs. A centroid is stored
/// at most once over the lifetime of the queue: re-inserting one that is
/// queued or was already popped is a no-op.
class CentroidQueue {
 public:
  /// Returns false if the centroid had been inserted before.
  bool push(const Centroid& c);

  std::optional<Centroid> pop();
  const Centroid* top() const;

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  bool seen(const Centroid& c) const { return seen_.count(c) != 0; }

 private:
  struct Item {
    Centroid centroid;
    std::uint64_t seq;
  };
  struct Later {
    bool operator()(const Item& a, const Item& b) const {
      if (a.centroid.total_cost != b.centroid.total_cost)
        return a.centroid.total_cost > b.centroid.total_cost;
      return a.seq > b.seq;
    }
  };
  struct CentroidHash {
    std::size_t operator()(const Centroid& c) const noexcept {
      std::size_t seed = hash_value(c.edge);
      hash_combine(seed, static_cast<std::size_t>(c.total_cost));
      return seed;
    }
  };

  std::priority_queue<Item, std::vector<Item>, Later> heap_;
  std::unordered_set<Centroid, CentroidHash> seen_;
  std::uint64_t seq_ = 0;
};

/// Pops the cheapest centroid if its cost is at most `f_bound`; otherwise
/// leaves the queue untouched.
std::optional<Centroid> pop_eligible_centroid(CentroidQueue& queue, Cost f_bound);

}  // namespace kbest::bela
