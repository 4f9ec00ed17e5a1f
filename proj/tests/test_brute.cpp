#include <doctest.h>

#include <set>

#include "gaintrail/brute.hpp"
#include "gaintrail/errors.hpp"
#include "support.hpp"

using namespace gaintrail;
using testsupport::W;

TEST_CASE("enumeration of degenerate graphs") {
  LabeledGraph edgeless;
  edgeless.add_vertex("a");
  edgeless.add_vertex("b");
  auto trails = enumerate_trails(edgeless, "a", "a");
  REQUIRE(trails.size() == 1);
  CHECK(trails[0].empty());
  CHECK(enumerate_trails(edgeless, "a", "b").empty());

  LabeledGraph looped;
  looped.add_edge("l", "a", "a", W({+1}));
  auto loop_trails = enumerate_trails(looped, "a", "a");
  REQUIRE(loop_trails.size() == 2);  // the loop forward, the loop reversed
  CHECK(loop_trails[0].arcs()[0] == Arc{"l", false});
  CHECK(loop_trails[1].arcs()[0] == Arc{"l", true});
}

TEST_CASE("bundle counts match the closed-form factorial") {
  // k parallel edges walked from one end back to itself alternate direction
  // forcibly, so the trails are exactly the edge orderings: k! of them.
  for (std::size_t k : {2u, 4u}) {
    LabeledGraph g = testsupport::bundle(k);
    std::size_t expected = 1;
    for (std::size_t i = 2; i <= k; ++i) expected *= i;
    CHECK(enumerate_trails(g, "x", "x").size() == expected);
  }
}

TEST_CASE("enumeration is sound, duplicate-free, and deterministic") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    RandomParams p;
    p.vertices = 3 + seed % 3;
    p.edges = 3 + seed % 5;
    p.same_endpoints = seed % 2 == 0;
    RandomInstance inst = random_instance(seed, p);
    CAPTURE(seed);
    auto trails = enumerate_trails(inst.graph, inst.a, inst.b);
    std::set<std::string> seen;
    for (const Trail& t : trails) {
      CHECK(is_eulerian(inst.graph, t, inst.a, inst.b));
      CHECK(seen.insert(trail_tokens(t)).second);
    }
    auto again = enumerate_trails(inst.graph, inst.a, inst.b);
    CHECK(again == trails);
  }
}

TEST_CASE("the cap aborts oversized enumerations") {
  LabeledGraph g = testsupport::bundle(4);
  CHECK_THROWS_AS((void)enumerate_trails(g, "x", "x", 5), enumeration_overflow);
  CHECK_THROWS_AS((void)enumerate_trails(g, "x", "x", 0), precondition_error);
  CHECK_THROWS_AS((void)enumerate_trails(g, "x", "zz"), input_error);
  CHECK_NOTHROW((void)enumerate_trails(g, "x", "x", 24));
}

TEST_CASE("all_labels_equal distinguishes equal, differing, and vacuous") {
  auto oracle = testsupport::s3_three_gens();

  LabeledGraph good = testsupport::three_blocks();
  CHECK(all_labels_equal(good, *oracle, "a", "b") == true);

  LabeledGraph bad = testsupport::bundle(3, 3, W({+1}));  // twist of order 3
  CHECK(all_labels_equal(bad, *oracle, "x", "y") == false);

  LabeledGraph split;
  split.add_edge("e1", "x", "y", Word{});
  split.add_edge("e2", "p", "q", Word{});
  CHECK_FALSE(all_labels_equal(split, *oracle, "x", "y").has_value());
}

TEST_CASE("random instances are reproducible and Eulerian when forced") {
  RandomParams p;
  p.vertices = 5;
  p.edges = 7;
  RandomInstance one = random_instance(42, p);
  RandomInstance two = random_instance(42, p);
  CHECK(one.graph == two.graph);
  CHECK(one.a == two.a);
  CHECK(one.b == two.b);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomParams q;
    q.vertices = 2 + seed % 5;
    q.edges = seed % 9;
    q.same_endpoints = seed % 3 == 0;
    RandomInstance inst = random_instance(seed, q);
    CAPTURE(seed);
    CHECK(trail_exists(inst.graph, inst.a, inst.b));
    if (q.same_endpoints) CHECK(inst.a == inst.b);
  }
}
