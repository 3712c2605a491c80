#include "kbest/bela/centroid_queue.hpp"

namespace kbest::bela {

bool CentroidQueue::push(const Centroid& c) {
  if (!seen_.insert(c).second) return false;
  heap_.push(Item{c, seq_++});
  return true;
}

std::optional<Centroid> CentroidQueue::pop() {
  if (heap_.empty()) return std::nullopt;
  Centroid c = heap_.top().centroid;
  heap_.pop();
  return c;
}

const Centroid* CentroidQueue::top() const {
  return heap_.empty() ? nullptr : &heap_.top().centroid;
}

std::optional<Centroid> pop_eligible_centroid(CentroidQueue& queue, Cost f_bound) {
  const Centroid* c = queue.top();
  if (c == nullptr || c->total_cost > f_bound) return std::nullopt;
  return queue.pop();
}

}  // namespace kbest::bela
