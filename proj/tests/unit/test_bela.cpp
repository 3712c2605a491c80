#include <doctest.h>

#include <algorithm>
#include <set>

#include "kbest/baselines/brute_force.hpp"
#include "kbest/baselines/decomposition.hpp"
#include "kbest/baselines/equivalence.hpp"
#include "kbest/bela/bela_search.hpp"
#include "kbest/bela/enumerate.hpp"
#include "kbest/core/errors.hpp"
#include "kbest/domains/grid.hpp"
#include "support/graphs.hpp"

using namespace kbest;
using namespace kbest::bela;
using namespace testsupport;

namespace {

// A ledger filled in by hand: states closed with their g* and recorded incoming edges.
struct Snapshot {
  std::shared_ptr<ExplicitGraph> graph;
  GraphSpace space;
  ClosedLedger ledger;
  CentroidQueue queue;
  RunMetrics metrics;

  Snapshot(std::shared_ptr<ExplicitGraph> g, const char* s, const char* t)
      : graph(g), space(named_space(g, s, t)) {}

  StateKey key(const char* name) const { return StateKey(*graph->find_name(name)); }

  void close(const char* name, Cost g, std::initializer_list<std::pair<const char*, const char*>> in) {
    ClosedEntry& e = ledger.close(key(name), g);
    for (const auto& [from, to] : in) e.incoming.push_back(edge(*graph, from, to));
  }

  WalkContext ctx() { return WalkContext{space, ledger, queue, &metrics, nullptr}; }

  std::vector<StateKey> names(std::initializer_list<const char*> n) const { return states(*graph, n); }
};

// The worked example just after the eighth pop: s0, s2, s1, s3 closed and the
// duplicate s1 -> s2 recorded.
Snapshot example_at_iteration_8() {
  Snapshot s(example_graph(), "s0", "s4");
  s.close("s0", 0, {});
  s.close("s2", 2, {{"s0", "s2"}, {"s1", "s2"}});
  s.close("s1", 3, {{"s0", "s1"}, {"s1", "s1"}});
  s.close("s3", 3, {{"s2", "s3"}});
  return s;
}

Snapshot chain_snapshot() {
  Snapshot s(chain_graph(), "s", "t");
  s.close("s", 0, {});
  s.close("A", 1, {{"s", "A"}});
  s.close("E", 2, {{"A", "E"}});
  s.close("B", 3, {{"A", "B"}, {"E", "B"}});
  s.close("C", 7, {{"B", "C"}});
  s.close("D", 8, {{"C", "D"}, {"F", "D"}});
  s.close("F", 9, {{"C", "F"}});
  return s;
}

SearchResult run(const SearchSpace& space, std::size_t kappa, bool h = false, TieBreak tb = TieBreak::Fifo,
                 TraceHook trace = {}) {
  SearchOptions o;
  o.kappa = kappa;
  o.use_heuristic = h;
  o.tiebreak = tb;
  o.trace = std::move(trace);
  return bela_search(space, o);
}

}  // namespace

TEST_CASE("sidetrack classification") {
  Snapshot s(sidetrack_graph(), "s", "t");
  s.close("s", 0, {});
  s.close("A", 1, {{"s", "A"}});
  s.close("C", 3, {{"s", "C"}});
  s.close("B", 3, {{"A", "B"}, {"C", "B"}});
  CHECK(is_sidetrack(edge(*s.graph, "C", "B"), s.ledger));
  CHECK_FALSE(is_sidetrack(edge(*s.graph, "A", "B"), s.ledger));

  auto e = example_at_iteration_8();
  CHECK(is_sidetrack(edge(*e.graph, "s1", "s1"), e.ledger));
  CHECK_THROWS_AS(is_sidetrack(edge(*e.graph, "s1", "s4"), e.ledger), PreconditionError);
}

TEST_CASE("register_gb creates centroids for incoming sidetracks") {
  auto s = example_at_iteration_8();
  const auto ctx = s.ctx();
  CHECK(register_gb(ctx, s.key("s2"), 3) == 1);
  REQUIRE(s.queue.size() == 1);
  CHECK(*s.queue.top() == Centroid{edge(*s.graph, "s1", "s2"), 7});
  CHECK(register_gb(ctx, s.key("s2"), 3) == 0);
  CHECK(s.queue.size() == 1);
  CHECK(register_gb(ctx, s.key("s1"), 3) == 1);
  CHECK(s.queue.seen(Centroid{edge(*s.graph, "s1", "s1"), 8}));
  CHECK(s.metrics.gb_insertions == 2);
  CHECK_THROWS_AS(register_gb(ctx, s.key("s4"), 0), PreconditionError);
}

TEST_CASE("get_prefixes") {
  auto s = example_at_iteration_8();
  const auto ctx = s.ctx();
  const auto p = get_prefixes(ctx, s.key("s1"), 1, 10);
  REQUIRE(p.size() == 1);
  CHECK(p[0].states == s.names({"s0", "s1"}));
  CHECK(p[0].cost == 3);
  CHECK(s.ledger.at(s.key("s0")).has_gb(4));
  CHECK(s.ledger.at(s.key("s1")).has_gb(1));

  const auto base = get_prefixes(ctx, s.key("s0"), 0, 10);
  REQUIRE(base.size() == 1);
  CHECK(base[0].states == s.names({"s0"}));
  CHECK(base[0].edges.empty());

  auto c = chain_snapshot();
  const auto cp = get_prefixes(c.ctx(), c.key("F"), 3, 10);
  REQUIRE(cp.size() == 1);
  CHECK(cp[0].states == c.names({"s", "A", "B", "C", "F"}));
  CHECK(c.ledger.at(c.key("B")).has_gb(9));
  CHECK(c.queue.seen(Centroid{edge(*c.graph, "E", "B"), 13}));
}

TEST_CASE("get_prefixes enumerates every optimal prefix") {
  // Two optimal routes into m, each reaching it at cost 2.
  auto g = named_graph({"s", "a", "b", "m", "t"},
                       {{"s", "a", 1}, {"s", "b", 1}, {"a", "m", 1}, {"b", "m", 1}, {"m", "t", 1}});
  Snapshot s(g, "s", "t");
  s.close("s", 0, {});
  s.close("a", 1, {{"s", "a"}});
  s.close("b", 1, {{"s", "b"}});
  s.close("m", 2, {{"a", "m"}, {"b", "m"}});
  CHECK(get_prefixes(s.ctx(), s.key("m"), 1, 10).size() == 2);
  CHECK(get_prefixes(s.ctx(), s.key("m"), 1, 1).size() == 1);
  CHECK(get_prefixes(s.ctx(), s.key("m"), 1, 0).empty());
}

TEST_CASE("get_suffixes") {
  auto s = example_at_iteration_8();
  const auto ctx = s.ctx();
  const auto sf = get_suffixes(ctx, s.key("s1"), 1, 10);
  REQUIRE(sf.size() == 1);
  CHECK(sf[0].states == s.names({"s1", "s4"}));
  CHECK(sf[0].cost == 1);

  const auto t = get_suffixes(ctx, s.key("s4"), 0, 10);
  REQUIRE(t.size() == 1);
  CHECK(t[0].states == s.names({"s4"}));
  CHECK(t[0].edges.empty());
  CHECK(get_suffixes(ctx, s.key("s4"), 2, 10).empty());

  auto c = chain_snapshot();
  c.ledger.at(c.key("C")).insert_gb(5);
  c.ledger.at(c.key("F")).insert_gb(3);
  c.ledger.at(c.key("D")).insert_gb(2);
  const auto cs = get_suffixes(c.ctx(), c.key("B"), 9, 10);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].states == c.names({"B", "C", "F", "D", "t"}));
  CHECK(cs[0].cost == 9);
}

TEST_CASE("get_paths on centroids of the worked example") {
  auto s = example_at_iteration_8();
  const auto ctx = s.ctx();
  const auto p1 = get_paths(ctx, Centroid{edge(*s.graph, "s1", "s4"), 4}, 10);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].states == s.names({"s0", "s1", "s4"}));
  CHECK(p1[0].cost == 4);

  const auto p3 = get_paths(ctx, Centroid{edge(*s.graph, "s1", "s1"), 6}, 10);
  REQUIRE(p3.size() == 1);
  CHECK(p3[0].states == s.names({"s0", "s1", "s1", "s4"}));
  CHECK(path_cost(p3[0]) == 6);

  CHECK_FALSE(s.queue.seen(Centroid{edge(*s.graph, "s1", "s2"), 7}));
  const auto p2 = get_paths(ctx, Centroid{edge(*s.graph, "s2", "s4"), 5}, 10);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].states == s.names({"s0", "s2", "s4"}));
  CHECK(p2[0].cost == 5);
  CHECK(s.queue.seen(Centroid{edge(*s.graph, "s1", "s2"), 7}));

  CHECK_THROWS_AS(get_paths(ctx, Centroid{edge(*s.graph, "s1", "s4"), 3}, 10), InvariantError);
}

TEST_CASE("zero-weight cycle in a walk is reported") {
  auto g = named_graph({"s", "a", "b", "t"}, {{"s", "a", 1}, {"a", "b", 0}, {"b", "a", 0}, {"b", "t", 1}});
  Snapshot s(g, "s", "t");
  s.close("s", 0, {});
  s.close("a", 1, {{"s", "a"}, {"b", "a"}});
  s.close("b", 1, {{"a", "b"}});
  CHECK_THROWS_AS(get_prefixes(s.ctx(), s.key("a"), 1, 100), EnumerationError);
}

TEST_CASE("centroid queue") {
  const EdgeRef e{StateKey(1), StateKey(2), 1, 0};
  const EdgeRef f{StateKey(2), StateKey(3), 1, 0};
  CentroidQueue q;
  CHECK_FALSE(pop_eligible_centroid(q, 100));
  q.push({e, 4});
  const auto z = pop_eligible_centroid(q, 5);
  REQUIRE(z);
  CHECK(z->total_cost == 4);
  CHECK(q.empty());
  CHECK_FALSE(q.push({e, 4}));

  q.push({e, 6});
  q.push({f, 7});
  CHECK_FALSE(pop_eligible_centroid(q, 5));
  CHECK(q.size() == 2);
  CHECK(pop_eligible_centroid(q, 6)->total_cost == 6);

  CentroidQueue fifo;
  fifo.push({f, 3});
  fifo.push({e, 3});
  CHECK(fifo.pop()->edge == f);
  CHECK(fifo.pop()->edge == e);
}

TEST_CASE("bela_search on the worked example") {
  auto g = example_graph();
  const GraphSpace space(g, 0, 4);
  const auto r = run(space, 3);
  REQUIRE(r.solutions.size() == 3);
  CHECK(r.solutions[0].states == states(*g, {"s0", "s1", "s4"}));
  CHECK(r.solutions[1].states == states(*g, {"s0", "s2", "s4"}));
  CHECK(r.solutions[2].states == states(*g, {"s0", "s1", "s1", "s4"}));
  CHECK(r.solutions.costs() == std::vector<Cost>{4, 5, 6});
  CHECK(r.metrics.expansions == 4);
  CHECK_FALSE(r.solutions.complete());
}

TEST_CASE("bela_search on the chain example") {
  auto g = chain_graph();
  const auto space = named_space(g, "s", "t");
  const auto r = run(space, 4);
  REQUIRE(r.solutions.size() == 4);
  CHECK(r.solutions.costs() == std::vector<Cost>{10, 11, 12, 13});
  CHECK(r.solutions[0].states == states(*g, {"s", "A", "B", "C", "D", "t"}));
  CHECK(r.solutions[1].states == states(*g, {"s", "A", "E", "B", "C", "D", "t"}));
  CHECK(r.solutions[2].states == states(*g, {"s", "A", "B", "C", "F", "D", "t"}));
  CHECK(r.solutions[3].states == states(*g, {"s", "A", "E", "B", "C", "F", "D", "t"}));
  CHECK(run(space, 10).solutions.complete());
}

TEST_CASE("bela_search edge cases and errors") {
  auto g = std::make_shared<ExplicitGraph>(2);
  g->add_edge(0, 1, 5);
  const GraphSpace two(g, 0, 1);
  const auto r = run(two, 3);
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0].cost == 5);
  CHECK(r.solutions.complete());

  CHECK_THROWS_AS(run(two, 0), PreconditionError);
  CHECK_THROWS_AS(run(GraphSpace(g, 0, 0), 1), PreconditionError);
  CHECK_THROWS_AS(run(two, 1, true), ConfigError);
  CHECK_THROWS_AS(run(GraphSpace(g, 0, 1, [](std::uint32_t v) { return v == 0 ? Cost(9) : Cost(0); }), 1, true),
                  ConfigError);

  auto unreachable = std::make_shared<ExplicitGraph>(3);
  unreachable->add_edge(0, 1, 1);
  const auto none = run(GraphSpace(unreachable, 0, 2), 5);
  CHECK(none.solutions.empty());
  CHECK(none.solutions.complete());

  CHECK(parse_tiebreak("lifo") == TieBreak::Lifo);
  CHECK_THROWS_AS(parse_tiebreak("random"), ConfigError);
}

TEST_CASE("bela_search honours limits with partial results") {
  auto g = example_graph();
  const GraphSpace space(g, 0, 4);
  SearchOptions o;
  o.kappa = 1000;
  o.limits.max_expansions = 3;
  try {
    bela_search(space, o);
    FAIL("expected a capped run");
  } catch (const CappedRunError& e) {
    // The expansion that crosses the limit is counted.
    CHECK(e.partial().metrics.expansions == 4);
    CHECK(e.partial().solutions.size() < 1000);
  }
  // The self-loop makes the path family infinite; centroids alone keep producing paths.
  o.limits = {};
  const auto r = bela_search(space, o);
  CHECK(r.solutions.size() == 1000);
  CHECK(r.metrics.expansions == 4);
}

TEST_CASE("bela0 matches the oracle on random digraphs") {
  std::size_t compared = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto space = random_digraph(seed, 30, 3, 1, 9);
    SolutionSet oracle;
    try {
      oracle = baselines::brute_force_k_paths(space, 25, 400'000);
    } catch (const baselines::OracleOverflow&) {
      continue;
    }
    const auto r = run(space, 25);
    const auto rep = baselines::verify_equivalence(r.solutions, oracle);
    INFO("seed " << seed << ": " << rep.first_divergence);
    CHECK(rep.equal);
    CHECK(r.solutions.complete() == oracle.complete());
    ++compared;
  }
  CHECK(compared >= 30);
}

TEST_CASE("emission, expansion window and centroid classes") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const auto space = random_digraph(seed, 25, 3, 1, 6);
    std::vector<Cost> emitted;
    std::set<StateKey> expanded;
    std::set<baselines::CentroidKey> consumed;
    Cost max_expanded_f = 0;
    const auto r = run(space, 12, false, TieBreak::Fifo, [&](const TraceEvent& ev) {
      if (ev.kind == TraceKind::PathEmitted) emitted.push_back(ev.value);
      if (ev.kind == TraceKind::Expand) {
        CHECK(expanded.insert(ev.state).second);
        max_expanded_f = std::max(max_expanded_f, ev.f);
      }
      if (ev.kind == TraceKind::CentroidConsumed) consumed.insert({*ev.edge, ev.value});
    });
    INFO("seed " << seed);
    CHECK(std::is_sorted(emitted.begin(), emitted.end()));
    if (r.solutions.empty() || r.solutions.complete()) continue;

    const Cost last = r.solutions.paths().back().cost;
    CHECK(max_expanded_f <= last);
    // Every non-goal state strictly cheaper than the last emitted cost must have been expanded.
    const auto gstar = baselines::dijkstra_gstar(space, 100'000);
    for (const auto& [state, g] : gstar)
      if (state != space.goal() && g < last) CHECK(expanded.count(state) == 1);

    for (const Path& p : r.solutions.paths()) {
      const auto d = baselines::first_sidetrack_decomposition(p, gstar);
      if (d.sidetrack) CHECK(consumed.count({*d.sidetrack, p.cost}) == 1);
    }
  }
}

TEST_CASE("runs are deterministic and monotone in kappa") {
  auto map = random_grid_map(7, 24, 24, 0.2);
  REQUIRE(map->passable(0, 0));
  REQUIRE(map->passable(23, 23));
  const domains::GridSpace space(map, domains::GridVariant::Octile, 0, 0, 23, 23);
  const auto a = run(space, 40, true, TieBreak::Lifo);
  const auto b = run(space, 40, true, TieBreak::Lifo);
  CHECK(a.solutions.paths() == b.solutions.paths());
  CHECK(a.metrics.expansions == b.metrics.expansions);
  CHECK(a.metrics.centroids_created == b.metrics.centroids_created);

  std::size_t prev_found = 0;
  Cost prev_max = 0;
  for (std::size_t k : {1, 2, 5, 10, 20, 40}) {
    const auto r = run(space, k, true);
    CHECK(r.solutions.size() >= prev_found);
    CHECK(r.solutions.paths().back().cost >= prev_max);
    prev_found = r.solutions.size();
    prev_max = r.solutions.paths().back().cost;
  }
}

TEST_CASE("a consistent heuristic never increases expansions") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto map = random_grid_map(seed, 32, 32, 0.15);
    for (auto variant : {domains::GridVariant::Unit, domains::GridVariant::Octile}) {
      if (!map->passable(1, 1) || !map->passable(30, 30)) continue;
      const domains::GridSpace space(map, variant, 1, 1, 30, 30);
      const auto zero = run(space, 20, false);
      const auto star = run(space, 20, true);
      CHECK(star.metrics.expansions <= zero.metrics.expansions);
      CHECK(star.solutions.costs() == zero.solutions.costs());
    }
  }
}
