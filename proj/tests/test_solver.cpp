#include <doctest.h>

#include <algorithm>

#include "cdfree/io.hpp"
#include "cdfree/solver.hpp"
#include "test_util.hpp"

using namespace cdfree;
using testutil::graph_from_mask;
using testutil::random_graph;

namespace {

Graph five_vertex_host(bool td_edge) {
  Graph h(5);
  for (const Edge& e : testutil::diamond().edges()) h.add_edge(e.u, e.v);
  h.add_edge(4, 0);
  h.add_edge(4, 1);
  if (td_edge) h.add_edge(4, 3);
  return h;
}

}  // namespace

TEST_CASE("terminal rules") {
  CHECK_FALSE(solve({testutil::claw(), 0}).yes);
  CHECK(solve({Graph(5), 0}).yes);

  // budget check strictly precedes the freeness test
  RuleTrace trace;
  CHECK_FALSE(solve({Graph(5), -1}).yes);
  CHECK(solve({Graph(5), 0}, nullptr, &trace).yes);
  REQUIRE(trace.size() == 1);
  CHECK(trace[0].rule == 2);
}

TEST_CASE("solve examples") {
  SUBCASE("claw, k=1") {
    const auto out = solve({testutil::claw(), 1});
    REQUIRE(out.yes);
    CHECK(out.certificate.size() == 1);
    CHECK(check_certificate(testutil::claw(), out.certificate, 1));
  }
  SUBCASE("diamond, k=1") { CHECK(solve({testutil::diamond(), 1}).yes); }
  SUBCASE("two disjoint diamonds, k=1") {
    Graph g(8);
    for (const Edge& e : testutil::diamond().edges()) {
      g.add_edge(e.u, e.v);
      g.add_edge(e.u + 4, e.v + 4);
    }
    CHECK_FALSE(solve({g, 1}).yes);
    CHECK(solve({g, 2}).yes);
  }
}

TEST_CASE("rule_claw branches") {
  const auto branches = rule_claw(testutil::claw(), ClawWitness{0, {1, 2, 3}});
  REQUIRE(branches.size() == 3);
  for (const EdgeSet& f : branches) {
    CHECK(f.size() == 1);
    CHECK(is_free(delete_edges(testutil::claw(), f)));
  }
}

TEST_CASE("rule_twins") {
  const Graph dia = testutil::diamond();
  const DiamondWitness w{0, 1, 2, 3};
  const auto branches = rule_twins(dia, w);
  CHECK(branches == std::vector<EdgeSet>{
                        {Edge(0, 2)}, {Edge(0, 1)}, {Edge(0, 3)}});

  // guard fails once a has a private neighbor
  Graph g(5);
  for (const Edge& e : dia.edges()) g.add_edge(e.u, e.v);
  g.add_edge(4, 0);
  CHECK_THROWS(rule_twins(g, w));
}

TEST_CASE("find_one_sided_vertices") {
  const DiamondWitness w{0, 1, 2, 3};
  CHECK(find_one_sided_vertices(testutil::diamond(), w).empty());

  Graph pendant(5);
  for (const Edge& e : testutil::diamond().edges()) pendant.add_edge(e.u, e.v);
  pendant.add_edge(4, 0);
  CHECK(find_one_sided_vertices(pendant, w) == std::vector<int>{4});

  Graph two(6);
  for (const Edge& e : testutil::diamond().edges()) two.add_edge(e.u, e.v);
  two.add_edge(4, 0);  // t ~ a,b
  two.add_edge(4, 1);
  two.add_edge(5, 2);  // s ~ c,d
  two.add_edge(5, 3);
  CHECK(find_one_sided_vertices(two, w) == std::vector<int>{4, 5});
}

TEST_CASE("rule_two_witnesses: worst-case cost multiset") {
  Graph g(6);
  for (const Edge& e : testutil::diamond().edges()) g.add_edge(e.u, e.v);
  g.add_edge(4, 0);
  g.add_edge(4, 1);
  g.add_edge(5, 0);
  g.add_edge(5, 1);
  g.add_edge(4, 5);
  const auto branches = rule_two_witnesses(g, DiamondWitness{0, 1, 2, 3}, 5, 4);
  std::vector<int> sizes;
  for (const EdgeSet& f : branches) sizes.push_back(static_cast<int>(f.size()));
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 3});
}

TEST_CASE("rule_single_witness, t not adjacent to d") {
  const Graph h = five_vertex_host(false);
  const auto branches = rule_single_witness(h, DiamondWitness{0, 1, 2, 3}, 4);
  // family minus {at,cd}; the published sixth set {bt,ac} is a typo for {bt,ad}
  const std::vector<EdgeSet> expected = {
      {Edge(0, 1)},
      {Edge(0, 2)},
      {Edge(1, 2)},
      {Edge(0, 3), Edge(0, 4)},
      {Edge(0, 3), Edge(1, 4)},
  };
  CHECK(branches == expected);
}

TEST_CASE("rule_single_witness, t adjacent to d: twelve pairs") {
  const Graph h = five_vertex_host(true);
  const auto branches = rule_single_witness(h, DiamondWitness{0, 1, 2, 3}, 4);
  REQUIRE(branches.size() == 12);
  for (const EdgeSet& f : branches) CHECK(f.size() == 2);
}

TEST_CASE("dispatch order on known instances") {
  CHECK(dispatch(testutil::claw(), 2).rule == 3);
  CHECK(dispatch(testutil::diamond(), 2).rule == 4);
  CHECK(dispatch(testutil::diamond(), -1).rule == 1);
  CHECK(dispatch(Graph(4), 0).rule == 2);
  CHECK(dispatch(five_vertex_host(false), 2).rule == 6);
  CHECK(dispatch(five_vertex_host(true), 2).rule == 7);

  // t ~ {a,d}, s ~ {a,d}, st an edge: the planted diamond is found first and
  // both witnesses are one-sided
  Graph two(6);
  for (const Edge& e : testutil::diamond().edges()) two.add_edge(e.u, e.v);
  two.add_edge(4, 0);
  two.add_edge(4, 3);
  two.add_edge(5, 0);
  two.add_edge(5, 3);
  two.add_edge(4, 5);
  const BranchStep step = dispatch(two, 2);
  CHECK(step.rule == 5);
  CHECK(step.labels == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("accepting trace replays to the leaf") {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(rng, 8, 0.4);
    const int k = static_cast<int>(rng.next_below(4));
    RuleTrace trace;
    const auto out = solve({g, k}, nullptr, &trace);
    if (!out.yes) continue;
    REQUIRE(!trace.empty());
    CHECK(trace.back().rule == 2);
    Graph cur = g;
    int budget = k;
    for (const TraceRecord& rec : trace) {
      if (rec.rule == 2) break;
      cur = delete_edges(cur, rec.branch);
      budget -= static_cast<int>(rec.branch.size());
    }
    CHECK(is_free(cur));
    CHECK(budget >= 0);
  }
}

TEST_CASE("oracle and baseline examples") {
  CHECK(oracle_solve({testutil::claw(), 1}).yes);
  CHECK_FALSE(oracle_solve({testutil::claw(), 0}).yes);
  CHECK(baseline_solve({testutil::diamond(), 1}).yes);
  CHECK(baseline_solve({Graph(3), 0}).yes);

  Graph two_claws(8);
  for (int leaf = 1; leaf <= 3; ++leaf) {
    two_claws.add_edge(0, leaf);
    two_claws.add_edge(4, 4 + leaf);
  }
  CHECK_FALSE(oracle_solve({two_claws, 1}).yes);
}

TEST_CASE("oracle rejects oversize budgets") {
  SplitMix64 rng(59);
  Graph big = random_graph(rng, 30, 0.9);
  CHECK_THROWS(oracle_solve({big, 15}));
}

TEST_CASE("solve agrees with the oracle on random instances") {
  SplitMix64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 5 + static_cast<int>(rng.next_below(4));
    const Graph g = random_graph(rng, n, 0.4);
    const int k = static_cast<int>(rng.next_below(4));
    CHECK(solve({g, k}).yes == oracle_solve({g, k}).yes);
  }
}

TEST_CASE("solve agrees with the baseline on random instances") {
  SplitMix64 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 5 + static_cast<int>(rng.next_below(6));
    const Graph g = random_graph(rng, n, 0.4);
    const int k = static_cast<int>(rng.next_below(5));
    CHECK(solve({g, k}).yes == baseline_solve({g, k}).yes);
  }
}

TEST_CASE("parallel mode matches the sequential answer") {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(rng, 9, 0.4);
    const int k = static_cast<int>(rng.next_below(4));
    const auto seq = solve({g, k});
    const auto par = solve_parallel({g, k});
    CHECK(seq.yes == par.yes);
    if (par.yes) CHECK(check_certificate(g, par.certificate, k));
  }
}

TEST_CASE("visited-node counts on planted benchmarks (recorded)") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::Planted;
    spec.clique_sizes = {5, 5, 4};
    spec.planted_edges = 4;
    spec.seed = seed;
    const Graph g = parse_instance(generate(spec));

    SolveStats branching, baseline;
    const bool a = solve({g, 4}, &branching).yes;
    const bool b = baseline_solve({g, 4}, &baseline).yes;
    CHECK(a);
    CHECK(b);
    MESSAGE("seed ", seed, ": branching nodes=", branching.nodes,
            " baseline nodes=", baseline.nodes);
  }
}

TEST_CASE("check_certificate") {
  CHECK(check_certificate(testutil::claw(), {Edge(0, 1)}, 1));
  CHECK_FALSE(check_certificate(testutil::claw(), {}, 0));
  CHECK(check_certificate(testutil::diamond(), {Edge(0, 2)}, 1));
  CHECK_FALSE(check_certificate(testutil::diamond(), {Edge(0, 2)}, 0));  // over budget
  CHECK_FALSE(check_certificate(testutil::diamond(), {Edge(1, 3)}, 1));  // absent edge
}

TEST_CASE("twin symmetry: the suppressed branches are redundant") {
  // under the twin guard, (a c) is an automorphism, so deleting cb or ab
  // leads to the same answer
  SplitMix64 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, 8, 0.35);
    // plant a diamond on 0,1,2,3 and force N(a)\{c} = N(c)\{a}
    for (const Edge& e : testutil::diamond().edges())
      if (!g.has_edge(e.u, e.v)) g.add_edge(e.u, e.v);
    if (g.has_edge(1, 3)) g.remove_edge(1, 3);
    for (int v = 4; v < 8; ++v) {
      if (g.has_edge(2, v)) g.remove_edge(2, v);
      if (g.has_edge(0, v)) g.add_edge(2, v);
    }
    const int k = 1 + static_cast<int>(rng.next_below(3));
    const auto left = oracle_solve({delete_edges(g, {Edge(2, 1)}), k - 1});
    const auto right = oracle_solve({delete_edges(g, {Edge(0, 1)}), k - 1});
    CHECK(left.yes == right.yes);
  }
}
