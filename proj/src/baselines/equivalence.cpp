#include "kbest/baselines/equivalence.hpp"

#include <algorithm>
#include <set>

namespace kbest::baselines {

namespace {

using PathKey = std::pair<std::vector<StateKey>, std::vector<EdgeRef>>;

std::set<PathKey> paths_below(const SolutionSet& s, Cost bound, bool inclusive) {
  std::set<PathKey> out;
  for (const Path& p : s.paths())
    if (p.cost < bound || (inclusive && p.cost == bound)) out.insert({p.states, p.edges});
  return out;
}

}  // namespace

EquivalenceReport verify_equivalence(const SolutionSet& a, const SolutionSet& b) {
  EquivalenceReport r;
  const auto ca = a.costs();
  const auto cb = b.costs();
  if (ca != cb) {
    r.equal = false;
    if (ca.size() != cb.size()) {
      r.first_divergence = "path counts differ: " + std::to_string(ca.size()) + " vs " +
                           std::to_string(cb.size());
    }
    const std::size_t n = std::min(ca.size(), cb.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (ca[i] != cb[i]) {
        r.first_divergence = "cost #" + std::to_string(i) + " differs: " + std::to_string(ca[i]) +
                             " vs " + std::to_string(cb[i]);
        break;
      }
    }
    return r;
  }
  if (ca.empty()) return r;
  const bool whole = a.complete() && b.complete();
  const Cost worst = ca.back();
  if (paths_below(a, worst, whole) != paths_below(b, worst, whole)) {
    r.equal = false;
    r.first_divergence = whole ? "path sets differ" : "path sets differ below cost " + std::to_string(worst);
  }
  return r;
}

}  // namespace kbest::baselines
