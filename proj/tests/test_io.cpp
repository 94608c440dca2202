#include <doctest.h>

#include <string>

#include "cdfree/detect.hpp"
#include "cdfree/io.hpp"
#include "cdfree/solver.hpp"
#include "test_util.hpp"

using namespace cdfree;

TEST_CASE("parse_instance") {
  SUBCASE("diamond file") {
    const Graph g = parse_instance(
        "c a diamond\np edge 4 5\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 3 4\n");
    CHECK(g == testutil::diamond());
  }
  SUBCASE("edgeless graph") {
    const Graph g = parse_instance("p edge 3 0\n");
    CHECK(g.n() == 3);
    CHECK(g.m() == 0);
  }
  SUBCASE("self-loop") {
    CHECK_THROWS_WITH_AS(parse_instance("p edge 2 1\ne 1 1\n"),
                         "line 2: self-loop", ParseError);
  }
  SUBCASE("duplicate edge") {
    CHECK_THROWS_AS(parse_instance("p edge 2 2\ne 1 2\ne 2 1\n"), ParseError);
  }
  SUBCASE("endpoint out of range") {
    CHECK_THROWS_AS(parse_instance("p edge 3 1\ne 1 4\n"), ParseError);
  }
  SUBCASE("malformed header") {
    CHECK_THROWS_AS(parse_instance("p graph 3 1\ne 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("e 1 2\n"), ParseError);
  }
  SUBCASE("edge count mismatch") {
    CHECK_THROWS_AS(parse_instance("p edge 3 2\ne 1 2\n"), ParseError);
  }
}

TEST_CASE("render/parse round-trip") {
  SplitMix64 rng(89);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.next_below(12));
    const Graph g = testutil::random_graph(rng, n, 0.4);
    CHECK(parse_instance(render_instance(g)) == g);
  }
}

TEST_CASE("parse_deletion_set") {
  const EdgeSet f = parse_deletion_set("e 1 3\nc note\ne 2 4\n", 4);
  CHECK(f == EdgeSet{Edge(0, 2), Edge(1, 3)});
  CHECK_THROWS_AS(parse_deletion_set("e 1 5\n", 4), ParseError);
  CHECK_THROWS_AS(parse_deletion_set("e 1 2\ne 2 1\n", 4), ParseError);
}

TEST_CASE("splitmix64 reference stream") {
  // frozen first outputs for seed 0; guards the fixed-PRNG portability contract
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);
}

TEST_CASE("generator determinism") {
  GeneratorSpec spec;
  spec.kind = GeneratorSpec::Kind::Random;
  spec.n = 12;
  spec.p = 0.4;
  spec.seed = 1234;
  CHECK(generate(spec) == generate(spec));

  GeneratorSpec planted;
  planted.kind = GeneratorSpec::Kind::Planted;
  planted.clique_sizes = {4, 4, 3};
  planted.planted_edges = 3;
  planted.seed = 99;
  CHECK(generate(planted) == generate(planted));
}

TEST_CASE("planted instances") {
  SUBCASE("no planted edges: free cluster graph") {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::Planted;
    spec.clique_sizes = {4, 4};
    spec.planted_edges = 0;
    spec.seed = 7;
    const Graph g = parse_instance(generate(spec));
    CHECK(g.n() == 8);
    CHECK(is_free(g));
    CHECK(solve({g, 0}).yes);
  }
  SUBCASE("k planted edges solve within budget k") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      GeneratorSpec spec;
      spec.kind = GeneratorSpec::Kind::Planted;
      spec.clique_sizes = {5, 4, 4};
      spec.planted_edges = 3;
      spec.seed = seed;
      const Graph g = parse_instance(generate(spec));
      const auto out = solve({g, 3});
      CHECK(out.yes);
      CHECK(out.certificate.size() <= 3);
    }
  }
  SUBCASE("infeasible plant count rejected") {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::Planted;
    spec.clique_sizes = {2, 2};
    spec.planted_edges = 5;  // only 4 non-edges exist
    spec.seed = 0;
    CHECK_THROWS(generate(spec));
  }
}
