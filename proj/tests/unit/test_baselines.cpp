#include <doctest.h>

#include "kbest/baselines/brute_force.hpp"
#include "kbest/baselines/decomposition.hpp"
#include "kbest/baselines/equivalence.hpp"
#include "kbest/baselines/m_search.hpp"
#include "kbest/bela/bela_search.hpp"
#include "kbest/core/errors.hpp"
#include "kbest/domains/grid.hpp"
#include "support/graphs.hpp"

using namespace kbest;
using namespace kbest::baselines;
using namespace testsupport;

namespace {

SearchResult msearch(const SearchSpace& space, std::size_t kappa, bool h = false) {
  MSearchOptions o;
  o.kappa = kappa;
  o.use_heuristic = h;
  return m_search(space, o);
}

Path path_through(const ExplicitGraph& g, std::initializer_list<const char*> names) {
  std::vector<const char*> v(names);
  std::vector<EdgeRef> edges;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) edges.push_back(edge(g, v[i], v[i + 1]));
  return make_path(StateKey(*g.find_name(v.front())), std::move(edges));
}

SolutionSet set_of(std::initializer_list<Path> paths) {
  SolutionSet s;
  for (const Path& p : paths) s.push(p);
  return s;
}

}  // namespace

TEST_CASE("m_search on the worked examples") {
  auto g = example_graph();
  const GraphSpace plain(g, 0, 4);
  const GraphSpace zero_h(g, 0, 4, [](std::uint32_t) { return Cost(0); });
  CHECK(msearch(plain, 3).solutions.costs() == std::vector<Cost>{4, 5, 6});
  CHECK(msearch(zero_h, 3, true).solutions.costs() == std::vector<Cost>{4, 5, 6});
  CHECK(msearch(named_space(chain_graph(), "s", "t"), 4).solutions.costs() == std::vector<Cost>{10, 11, 12, 13});

  const auto r = msearch(plain, 3);
  CHECK(r.solutions[2].states == states(*g, {"s0", "s1", "s1", "s4"}));
  CHECK(r.metrics.goal_pops == 3);
}

TEST_CASE("m_search edge cases") {
  auto g = std::make_shared<ExplicitGraph>(2);
  g->add_edge(0, 1, 5);
  const GraphSpace two(g, 0, 1);
  const auto r = msearch(two, 5);
  CHECK(r.solutions.size() == 1);
  CHECK(r.solutions.complete());
  CHECK_THROWS_AS(msearch(two, 0), PreconditionError);
  CHECK_THROWS_AS(msearch(GraphSpace(g, 1, 1), 1), PreconditionError);
  CHECK_THROWS_AS(msearch(two, 1, true), ConfigError);

  MSearchOptions o;
  o.kappa = 1000;
  o.limits.max_expansions = 10;
  CHECK_THROWS_AS(m_search(GraphSpace(example_graph(), 0, 4), o), CappedRunError);
}

TEST_CASE("m_search agrees with bela and the oracle on random digraphs") {
  std::size_t compared = 0;
  for (std::uint64_t seed = 500; seed < 540; ++seed) {
    const auto space = random_digraph(seed, 20, 3, 1, 9);
    SolutionSet oracle;
    try {
      oracle = brute_force_k_paths(space, 10, 400'000);
    } catch (const OracleOverflow&) {
      continue;
    }
    const auto m = msearch(space, 10);
    bela::SearchOptions o;
    o.kappa = 10;
    const auto b = bela::bela_search(space, o);
    INFO("seed " << seed);
    CHECK(verify_equivalence(m.solutions, oracle).equal);
    CHECK(verify_equivalence(b.solutions, m.solutions).equal);
    ++compared;
  }
  CHECK(compared >= 30);
}

TEST_CASE("oracle") {
  auto g = example_graph();
  const GraphSpace space(g, 0, 4);
  const auto r = brute_force_k_paths(space, 3, 1000);
  CHECK(r.costs() == std::vector<Cost>{4, 5, 6});
  CHECK_FALSE(r.complete());

  auto one = std::make_shared<ExplicitGraph>(2);
  one->add_edge(0, 1, 7);
  const auto single = brute_force_k_paths(GraphSpace(one, 0, 1), 5, 1000);
  CHECK(single.size() == 1);
  CHECK(single.complete());

  // Dead ends are pruned, so a large unreachable fan-out does not count against the cap.
  auto dead = std::make_shared<ExplicitGraph>(4);
  dead->add_edge(0, 3, 1);
  dead->add_edge(0, 1, 1);
  dead->add_edge(1, 2, 1);
  dead->add_edge(2, 1, 1);
  const auto pruned = brute_force_k_paths(GraphSpace(dead, 0, 3), 5, 10);
  CHECK(pruned.size() == 1);
  CHECK(pruned.complete());

  CHECK_THROWS_AS(brute_force_k_paths(space, 100'000, 50), OracleOverflow);

  const auto levels = brute_force_cost_levels(named_space(chain_graph(), "s", "t"), 3, 1000);
  CHECK(levels.costs() == std::vector<Cost>{10, 11, 12});
  const auto loops = brute_force_cost_levels(space, 3, 1000);
  CHECK(loops.costs() == std::vector<Cost>{4, 5, 6});
}

TEST_CASE("first sidetrack decomposition") {
  auto g = sidetrack_graph();
  const auto space = named_space(g, "s", "t");
  const auto gstar = dijkstra_gstar(space, 100);
  CHECK(gstar.at(StateKey(*g->find_name("B"))) == 3);

  const auto cb = first_sidetrack_decomposition(path_through(*g, {"s", "C", "B", "t"}), gstar);
  CHECK(cb.prefix.states == states(*g, {"s", "C"}));
  REQUIRE(cb.sidetrack);
  CHECK(*cb.sidetrack == edge(*g, "C", "B"));
  CHECK(cb.suffix.states == states(*g, {"B", "t"}));
  CHECK(cb.suffix.cost == 1);

  const auto de = first_sidetrack_decomposition(path_through(*g, {"s", "D", "E", "t"}), gstar);
  CHECK(de.prefix.states == states(*g, {"s", "D", "E"}));
  REQUIRE(de.sidetrack);
  CHECK(*de.sidetrack == edge(*g, "E", "t"));
  CHECK(de.suffix.states.empty());

  const auto ab = first_sidetrack_decomposition(path_through(*g, {"s", "A", "B", "t"}), gstar);
  CHECK_FALSE(ab.sidetrack);
  CHECK(ab.prefix.states == states(*g, {"s", "A", "B", "t"}));
}

TEST_CASE("centroid partition of the chain example") {
  auto g = chain_graph();
  const auto space = named_space(g, "s", "t");
  const auto gstar = dijkstra_gstar(space, 100);
  const std::vector<Path> paths = {
      path_through(*g, {"s", "A", "B", "C", "D", "t"}),
      path_through(*g, {"s", "A", "E", "B", "C", "D", "t"}),
      path_through(*g, {"s", "A", "B", "C", "F", "D", "t"}),
      path_through(*g, {"s", "A", "E", "B", "C", "F", "D", "t"}),
  };
  const auto rep = centroid_partition_check(paths, gstar);
  CHECK(rep.ok());
  CHECK(rep.optimal_paths == 1);
  CHECK(rep.suboptimal_paths == 3);
  REQUIRE(rep.groups.size() == 3);
  CHECK(rep.groups.at({edge(*g, "E", "B"), 11}) == std::vector<std::size_t>{1});
  CHECK(rep.groups.at({edge(*g, "F", "D"), 12}) == std::vector<std::size_t>{2});
  CHECK(rep.groups.at({edge(*g, "E", "B"), 13}) == std::vector<std::size_t>{3});
  CHECK(adjacent_path_check(paths, gstar).empty());

  const auto only = centroid_partition_check({paths[0]}, gstar);
  CHECK(only.groups.empty());
  CHECK(only.ok());

  CHECK_FALSE(centroid_partition_check({paths[1], paths[1]}, gstar).ok());
  // Without the optimal path, nothing cheaper passes through B.
  CHECK_FALSE(adjacent_path_check({paths[1]}, gstar).empty());
}

TEST_CASE("partition and adjacency hold for enumerated paths") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 900; seed < 960; ++seed) {
    const auto space = random_digraph(seed, 18, 3, 1, 7);
    SolutionSet all;
    try {
      all = brute_force_cost_levels(space, 3, 200'000);
    } catch (const OracleOverflow&) {
      continue;
    }
    if (all.empty()) continue;
    const auto gstar = dijkstra_gstar(space, 100'000);
    INFO("seed " << seed);
    const auto rep = centroid_partition_check(all.paths(), gstar);
    CHECK(rep.ok());
    CHECK(adjacent_path_check(all.paths(), gstar).empty());
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("equivalence rules") {
  auto g = chain_graph();
  const Path p10 = path_through(*g, {"s", "A", "B", "C", "D", "t"});
  const Path p11 = path_through(*g, {"s", "A", "E", "B", "C", "D", "t"});
  const Path p12 = path_through(*g, {"s", "A", "B", "C", "F", "D", "t"});
  CHECK(verify_equivalence(SolutionSet{}, SolutionSet{}).equal);
  CHECK(verify_equivalence(set_of({p10, p11}), set_of({p10, p11})).equal);
  CHECK_FALSE(verify_equivalence(set_of({p10, p11}), set_of({p10, p12})).equal);
  CHECK_FALSE(verify_equivalence(set_of({p10}), set_of({p10, p11})).equal);

  // Two different paths of the same cost: only the worst cost may differ.
  auto h = named_graph({"s", "a", "b", "t"}, {{"s", "a", 1}, {"s", "b", 1}, {"a", "t", 1}, {"b", "t", 1}});
  const Path pa = path_through(*h, {"s", "a", "t"});
  const Path pb = path_through(*h, {"s", "b", "t"});
  CHECK(verify_equivalence(set_of({pa}), set_of({pb})).equal);
  SolutionSet ca = set_of({pa});
  SolutionSet cb = set_of({pb});
  ca.set_complete(true);
  cb.set_complete(true);
  const auto rep = verify_equivalence(ca, cb);
  CHECK_FALSE(rep.equal);
  CHECK_FALSE(rep.first_divergence.empty());

  const auto out = bela::bela_search(GraphSpace(example_graph(), 0, 4), bela::SearchOptions{3});
  CHECK(verify_equivalence(out.solutions, brute_force_k_paths(GraphSpace(example_graph(), 0, 4), 3, 1000)).equal);
}

TEST_CASE("tie-break policies agree on a 64x64 grid") {
  auto map = random_grid_map(11, 64, 64, 0.15);
  REQUIRE(map->passable(2, 2));
  REQUIRE(map->passable(61, 60));
  const domains::GridSpace space(map, domains::GridVariant::Octile, 2, 2, 61, 60);
  bela::SearchOptions o;
  o.kappa = 100;
  o.use_heuristic = true;
  o.tiebreak = bela::TieBreak::Fifo;
  const auto fifo = bela::bela_search(space, o);
  o.tiebreak = bela::TieBreak::Lifo;
  const auto lifo = bela::bela_search(space, o);
  CHECK(fifo.solutions.size() == 100);
  CHECK(fifo.solutions.costs() == lifo.solutions.costs());
  CHECK(verify_equivalence(fifo.solutions, lifo.solutions).equal);
}
