#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "kbest/core/search_space.hpp"
#include "kbest/core/types.hpp"

namespace kbest {

/// Ordered list of distinct solution paths with nondecreasing costs.
///
/// `complete()` means fewer than the requested number of paths exist, i.e. the
/// set holds every solution path of the space.
class SolutionSet {
 public:
  /// Appends `path` unless an identical path is already a member, in which case
  /// nothing happens and false is returned. Throws InvariantError when `path`
  /// is cheaper than the current last member.
  bool push(Path path);

  bool contains(const Path& path) const;

  const std::vector<Path>& paths() const noexcept { return paths_; }
  std::size_t size() const noexcept { return paths_.size(); }
  bool empty() const noexcept { return paths_.empty(); }
  const Path& operator[](std::size_t i) const { return paths_[i]; }

  bool complete() const noexcept { return complete_; }
  void set_complete(bool value) noexcept { complete_ = value; }

  /// Costs in emission order.
  std::vector<Cost> costs() const;

 private:
  std::vector<Path> paths_;
  std::unordered_multimap<std::size_t, std::size_t> index_;
  bool complete_ = false;
};

/// `cost state state ...` using the space's state rendering.
std::string format_path(const Path& path, const SearchSpace& space);

/// Inverse of format_path. Edges are recovered from the space's successor
/// lists; when parallel edges connect a pair of states the lowest-serial
/// combination matching the stated cost is chosen.
Path parse_path(const std::string& line, const SearchSpace& space);

/// Header `k=<n> complete=<0|1>` followed by one formatted path per line.
void write_solution_set(std::ostream& os, const SolutionSet& set, const SearchSpace& space);
SolutionSet read_solution_set(std::istream& is, const SearchSpace& space);

}  // namespace kbest
