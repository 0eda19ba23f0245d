#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "lgc/graph.hpp"

using namespace lgc;

namespace {

// 5-clique on {0..4} plus a pendant node 5 hanging off node 0.
Graph clique_with_pendant() {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < 5; ++u)
    for (NodeId v = u + 1; v < 5; ++v) edges.push_back({u, v, 1.0});
  edges.push_back({0, 5, 1.0});
  return Graph::build(6, edges);
}

}  // namespace

TEST_CASE("node set sorts, deduplicates and answers membership") {
  NodeSet s(std::vector<NodeId>{3, 1, 3, 2});
  CHECK(s.size() == 3);
  CHECK(s.ids() == std::vector<NodeId>{1, 2, 3});
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(4));

  NodeSet r = NodeSet::range(3, 7);
  CHECK(r.ids() == std::vector<NodeId>{3, 4, 5, 6});
  CHECK(NodeSet::range(5, 5).empty());
  CHECK(NodeSet(std::vector<NodeId>{}) == NodeSet());
}

TEST_CASE("build counts edges and degrees on a clique with a pendant") {
  Graph g = clique_with_pendant();
  CHECK(g.node_count() == 6);
  CHECK(g.edge_count() == 11);
  CHECK(g.total_weight() == doctest::Approx(11.0));
  CHECK(g.volume() == doctest::Approx(22.0));
  CHECK(g.degree(0) == 5);
  CHECK(g.degree(1) == 4);
  CHECK(g.degree(5) == 1);
  CHECK(g.weighted_degree(0) == doctest::Approx(5.0));

  double sum = 0.0;
  for (NodeId i = 0; i < g.node_count(); ++i) sum += g.weighted_degree(i);
  CHECK(sum == doctest::Approx(g.volume()));
}

TEST_CASE("build drops self-loops and keeps the last duplicate weight") {
  std::vector<Edge> edges = {{0, 1, 1.0}, {2, 2, 9.0}, {1, 0, 2.5}};
  Graph g = Graph::build(3, edges);
  CHECK(g.edge_count() == 1);
  CHECK(g.total_weight() == doctest::Approx(2.5));
  auto nbs = g.neighbors(0);
  REQUIRE(nbs.size() == 1);
  CHECK(nbs[0].id == 1);
  CHECK(nbs[0].weight == doctest::Approx(2.5));
  CHECK(g.degree(2) == 0);
}

TEST_CASE("zero-weight edges stay in the topology") {
  std::vector<Edge> edges = {{0, 1, 0.0}};
  Graph g = Graph::build(2, edges);
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(0) == 1);
  CHECK(g.weighted_degree(0) == doctest::Approx(0.0));
  CHECK(g.total_weight() == doctest::Approx(0.0));
}

TEST_CASE("adjacency comes back sorted by neighbor id") {
  std::vector<Edge> edges = {{0, 4, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {0, 1, 1.0}};
  Graph g = Graph::build(5, edges);
  auto nbs = g.neighbors(0);
  REQUIRE(nbs.size() == 4);
  for (std::size_t i = 1; i < nbs.size(); ++i) CHECK(nbs[i - 1].id < nbs[i].id);
}

TEST_CASE("build rejects bad input") {
  std::vector<Edge> out_of_range = {{0, 7, 1.0}};
  CHECK_THROWS_AS(Graph::build(3, out_of_range), std::out_of_range);
  std::vector<Edge> negative = {{0, 1, -1.0}};
  CHECK_THROWS_AS(Graph::build(3, negative), std::invalid_argument);
  CHECK_THROWS_AS(Graph::build(-1, std::vector<Edge>{}), std::invalid_argument);
}

TEST_CASE("set_stats matches hand counts on the clique with a pendant") {
  Graph g = clique_with_pendant();

  SUBCASE("the clique itself") {
    SetStats st = set_stats(g, NodeSet::range(0, 5));
    CHECK(st.cut == doctest::Approx(1.0));
    CHECK(st.vol == doctest::Approx(21.0));
    CHECK(st.internal_vol == doctest::Approx(20.0));
    // the complement side has volume 1, so the cut dominates it
    CHECK(st.conductance == doctest::Approx(1.0));
  }

  SUBCASE("two clique nodes") {
    SetStats st = set_stats(g, NodeSet(std::vector<NodeId>{1, 2}));
    CHECK(st.cut == doctest::Approx(6.0));
    CHECK(st.vol == doctest::Approx(8.0));
    CHECK(st.internal_vol == doctest::Approx(2.0));
    CHECK(st.conductance == doctest::Approx(0.75));
  }

  SUBCASE("the pendant") {
    SetStats st = set_stats(g, NodeSet(std::vector<NodeId>{5}));
    CHECK(st.cut == doctest::Approx(1.0));
    CHECK(st.vol == doctest::Approx(1.0));
    CHECK(st.conductance == doctest::Approx(1.0));
  }
}

TEST_CASE("set_stats respects edge weights") {
  std::vector<Edge> edges = {{0, 1, 2.0}, {1, 2, 0.5}, {2, 0, 1.0}};
  Graph g = Graph::build(3, edges);
  SetStats st = set_stats(g, NodeSet(std::vector<NodeId>{0, 1}));
  CHECK(st.cut == doctest::Approx(1.5));
  CHECK(st.vol == doctest::Approx(5.5));
  CHECK(st.internal_vol == doctest::Approx(4.0));
  CHECK(st.conductance == doctest::Approx(1.5 / std::min(5.5, 7.0 - 5.5)));
}

TEST_CASE("set_stats rejects degenerate sets") {
  Graph g = clique_with_pendant();
  CHECK_THROWS_AS(set_stats(g, NodeSet()), std::invalid_argument);
  CHECK_THROWS_AS(set_stats(g, NodeSet::range(0, 6)), std::invalid_argument);
  CHECK_THROWS_AS(set_stats(g, NodeSet(std::vector<NodeId>{0, 17})), std::out_of_range);
}

TEST_CASE("check_node flags out-of-range ids") {
  Graph g = Graph::build(2, std::vector<Edge>{{0, 1, 1.0}});
  CHECK_NOTHROW(g.check_node(1));
  CHECK_THROWS_AS(g.check_node(2), std::out_of_range);
  CHECK_THROWS_AS(g.check_node(-1), std::out_of_range);
  CHECK_THROWS_AS(g.neighbors(5), std::out_of_range);
}
