#include <doctest.h>

#include <sstream>

#include "kbest/core/errors.hpp"
#include "kbest/core/solution_set.hpp"
#include "kbest/core/validate.hpp"
#include "kbest/domains/grid.hpp"
#include "support/graphs.hpp"

using namespace kbest;
using namespace testsupport;

namespace {

Path path_through(const ExplicitGraph& g, std::initializer_list<const char*> names) {
  std::vector<const char*> v(names);
  std::vector<EdgeRef> edges;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) edges.push_back(edge(g, v[i], v[i + 1]));
  return make_path(StateKey(*g.find_name(v.front())), std::move(edges));
}

// 0 -> 1 -> 2 with the second edge weighing -1; ExplicitGraph refuses such edges.
struct NegativeChain : SearchSpace {
  StateKey start() const override { return StateKey(0); }
  StateKey goal() const override { return StateKey(2); }
  void successors(StateKey s, std::vector<EdgeRef>& out) const override {
    out.clear();
    if (s.value() < 2) out.push_back({s, StateKey(s.value() + 1), s.value() == 0 ? Cost(2) : Cost(-1), 0});
  }
};

}  // namespace

TEST_CASE("path_cost sums edge weights") {
  auto g = example_graph();
  CHECK(path_cost(path_through(*g, {"s0", "s1", "s4"})) == 4);
  CHECK(path_cost(make_path(StateKey(0), {})) == 0);
  auto c = chain_graph();
  CHECK(path_cost(path_through(*c, {"s", "A", "E", "B", "C", "D", "t"})) == 11);
}

TEST_CASE("path_cost rejects broken linkage") {
  auto g = example_graph();
  Path p = path_through(*g, {"s0", "s1", "s4"});
  p.states[1] = StateKey(3);
  try {
    path_cost(p);
    FAIL("expected StructureError");
  } catch (const StructureError& e) {
    CHECK(e.index() == 0);
  }
  Path q = path_through(*g, {"s0", "s1", "s4"});
  q.states.pop_back();
  CHECK_THROWS_AS(path_cost(q), StructureError);
}

TEST_CASE("solution set ordering and dedup") {
  auto g = example_graph();
  const Path p4 = path_through(*g, {"s0", "s1", "s4"});
  const Path p5 = path_through(*g, {"s0", "s2", "s4"});
  const Path p6 = path_through(*g, {"s0", "s1", "s1", "s4"});
  SolutionSet set;
  CHECK(set.push(p4));
  CHECK(set.size() == 1);
  CHECK(set.push(p5));
  CHECK(set.push(p6));
  CHECK(set.costs() == std::vector<Cost>{4, 5, 6});
  CHECK_FALSE(set.push(p6));
  CHECK(set.size() == 3);
  CHECK_THROWS_AS(set.push(p5), InvariantError);

  SolutionSet other;
  other.push(p5);
  CHECK_THROWS_AS(other.push(make_path(StateKey(0), {EdgeRef{StateKey(0), StateKey(1), 3, 0}})),
                  InvariantError);
}

TEST_CASE("solution set serialization round trip") {
  auto g = example_graph();
  const GraphSpace space(g, 0, 4);
  SolutionSet set;
  set.push(path_through(*g, {"s0", "s1", "s4"}));
  set.push(path_through(*g, {"s0", "s2", "s4"}));
  set.push(path_through(*g, {"s0", "s1", "s1", "s4"}));
  set.set_complete(true);
  CHECK(format_path(set[0], space) == "4 s0 s1 s4");
  std::stringstream ss;
  write_solution_set(ss, set, space);
  const std::string text = ss.str();
  const SolutionSet back = read_solution_set(ss, space);
  CHECK(back.paths() == set.paths());
  CHECK(back.complete());
  std::stringstream again;
  write_solution_set(again, back, space);
  CHECK(again.str() == text);
  CHECK_THROWS(parse_path("5 s0 s1 s4", space));
  CHECK_THROWS(parse_path("4 s0 s4", space));
}

TEST_CASE("parallel edges keep cost on round trip") {
  auto g = std::make_shared<ExplicitGraph>(2);
  g->add_edge(0, 1, 5);
  g->add_edge(0, 1, 5);
  const GraphSpace space(g, 0, 1);
  const Path p = make_path(StateKey(0), {g->out_edges(0)[1]});
  const Path back = parse_path(format_path(p, space), space);
  CHECK(back.states == p.states);
  CHECK(back.cost == p.cost);
  CHECK(back.edges[0].serial == 0);
}

TEST_CASE("validate reports heuristic and weight problems") {
  auto g = example_graph();
  CHECK(validate_search_space(GraphSpace(g, 0, 4), 100).ok());
  CHECK(validate_search_space(GraphSpace(g, 0, 4, [](std::uint32_t) { return 0; }), 100).consistent());

  auto map = std::make_shared<domains::GridMap>(8, 8, std::vector<char>(64, '.'));
  const domains::GridSpace grid(map, domains::GridVariant::Unit, 0, 0, 7, 5);
  const auto r = validate_search_space(grid, 1000);
  CHECK(r.ok());
  CHECK(r.states_sampled == 64);

  const auto rn = validate_search_space(NegativeChain{}, 10);
  REQUIRE(rn.negative_edges.size() == 1);
  CHECK(rn.negative_edges[0].source == StateKey(1));
  CHECK_FALSE(rn.ok());

  // h(s0)=5 exceeds w(s0,s1) + h(s1) = 3.
  const auto ri = validate_search_space(
      GraphSpace(g, 0, 4, [](std::uint32_t v) { return v == 0 ? Cost(5) : Cost(0); }), 10);
  CHECK_FALSE(ri.consistent());
  CHECK(ri.inconsistent_edges.size() == 2);

  const auto rg = validate_search_space(GraphSpace(g, 0, 4, [](std::uint32_t) { return Cost(1); }), 10);
  CHECK(rg.goal_heuristic_nonzero);

  auto zc = std::make_shared<ExplicitGraph>(3);
  zc->add_edge(0, 1, 0);
  zc->add_edge(1, 0, 0);
  zc->add_edge(1, 2, 1);
  CHECK(validate_search_space(GraphSpace(zc, 0, 2), 10).zero_weight_cycle);
  CHECK_FALSE(validate_search_space(GraphSpace(g, 0, 4), 10).zero_weight_cycle);
}
