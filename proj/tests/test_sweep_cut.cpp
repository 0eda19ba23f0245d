#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lgc/rng.hpp"
#include "lgc/sweep_cut.hpp"

using namespace lgc;

namespace {

// Two 5-cliques {0..4} and {5..9} joined by the edge (4,5), with a pendant
// node 10 hanging off node 0.
Graph barbell_with_pendant() {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < 5; ++u)
    for (NodeId v = u + 1; v < 5; ++v) edges.push_back({u, v, 1.0});
  for (NodeId u = 5; u < 10; ++u)
    for (NodeId v = u + 1; v < 10; ++v) edges.push_back({u, v, 1.0});
  edges.push_back({4, 5, 1.0});
  edges.push_back({0, 10, 1.0});
  return Graph::build(11, edges);
}

Embedding make_embedding(std::vector<std::pair<NodeId, double>> values) {
  Embedding x;
  std::sort(values.begin(), values.end());
  x.values = std::move(values);
  return x;
}

}  // namespace

TEST_CASE("raw scores and degree-normalized scores pick different prefixes") {
  Graph g = barbell_with_pendant();
  Embedding x = make_embedding({{0, 0.6}, {5, 0.9}, {6, 0.8}, {7, 0.7}, {8, 0.6}, {9, 0.5}});

  SUBCASE("raw ordering starts at the bridge endpoint and keeps node 0") {
    SweepResult res = sweep_cut(g, x, false);
    CHECK(res.cluster.ids() == std::vector<NodeId>{0, 5, 6, 7, 8, 9});
    CHECK(res.conductance == doctest::Approx(1.0 / 3.0));
  }

  SUBCASE("normalization pushes the high-degree nodes back and frees the clique") {
    SweepResult res = sweep_cut(g, x, true);
    CHECK(res.cluster == NodeSet::range(5, 10));
    CHECK(res.conductance == doctest::Approx(1.0 / 21.0));
  }
}

TEST_CASE("score ties break toward the smaller node id") {
  std::vector<Edge> edges = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}};
  Graph g = Graph::build(4, edges);
  Embedding x = make_embedding({{1, 0.7}, {2, 0.7}});
  SweepResult res = sweep_cut(g, x, false);
  // both prefixes have conductance 1; the first one, {1}, wins
  CHECK(res.cluster.ids() == std::vector<NodeId>{1});
  CHECK(res.conductance == doctest::Approx(1.0));
}

TEST_CASE("a zero-conductance prefix is found across components") {
  std::vector<Edge> edges = {{0, 1, 1.0}, {2, 3, 1.0}};
  Graph g = Graph::build(4, edges);
  Embedding x = make_embedding({{0, 4.0}, {1, 3.0}, {2, 2.0}, {3, 1.0}});
  SweepResult res = sweep_cut(g, x, false);
  CHECK(res.cluster.ids() == std::vector<NodeId>{0, 1});
  CHECK(res.conductance == doctest::Approx(0.0));
}

TEST_CASE("support covering every node still returns a proper subset") {
  std::vector<Edge> edges = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}};
  Graph g = Graph::build(3, edges);
  Embedding x = make_embedding({{0, 3.0}, {1, 2.0}, {2, 1.0}});
  SweepResult res = sweep_cut(g, x, false);
  CHECK(res.cluster.size() < 3);
  CHECK(res.conductance == doctest::Approx(1.0));
}

TEST_CASE("relabeling nodes permutes the swept cluster") {
  auto rng = make_stream(301, 0);
  const NodeId n = 24;
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 2; v < n; ++v)
      if (uniform01(rng) < 0.2) edges.push_back({u, v, 1.0});
  Graph g = Graph::build(n, edges);

  std::vector<NodeId> perm(n);
  for (NodeId i = 0; i < n; ++i) perm[i] = i;
  for (NodeId i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[uniform_index(rng, static_cast<std::uint64_t>(i) + 1)]);

  std::vector<Edge> mapped_edges;
  for (const Edge& e : edges) mapped_edges.push_back({perm[e.u], perm[e.v], e.weight});
  Graph mapped = Graph::build(n, mapped_edges);

  // distinct values so the ordering is permutation-independent
  std::vector<std::pair<NodeId, double>> vals, mapped_vals;
  for (NodeId i = 0; i < 10; ++i) {
    const double v = 1.0 + static_cast<double>(i);
    vals.push_back({i, v});
    mapped_vals.push_back({perm[i], v});
  }
  Embedding x = make_embedding(vals);
  Embedding mx = make_embedding(mapped_vals);

  for (bool normalize : {false, true}) {
    SweepResult a = sweep_cut(g, x, normalize);
    SweepResult b = sweep_cut(mapped, mx, normalize);
    CHECK(a.conductance == doctest::Approx(b.conductance));
    std::vector<NodeId> remapped;
    for (NodeId i : a.cluster) remapped.push_back(perm[i]);
    CHECK(NodeSet(std::move(remapped)) == b.cluster);
  }
}

TEST_CASE("zero-degree nodes keep their raw score under normalization") {
  std::vector<Edge> edges = {{1, 2, 1.0}};
  Graph g = Graph::build(3, edges);
  Embedding x = make_embedding({{0, 5.0}, {1, 1.0}});
  SweepResult res = sweep_cut(g, x, true);
  // the isolated node alone has no volume, so the two-node prefix wins
  CHECK(res.cluster.ids() == std::vector<NodeId>{0, 1});
  CHECK(res.conductance == doctest::Approx(1.0));
}

TEST_CASE("sweep rejects empty and out-of-range support") {
  Graph g = Graph::build(2, std::vector<Edge>{{0, 1, 1.0}});
  CHECK_THROWS_AS(sweep_cut(g, Embedding{}, false), std::invalid_argument);
  Embedding bad = make_embedding({{7, 1.0}});
  CHECK_THROWS_AS(sweep_cut(g, bad, false), std::out_of_range);
}
