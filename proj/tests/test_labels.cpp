#include <doctest.h>

#include <cstdio>
#include <stdexcept>
#include <vector>

#include "lgc/labels.hpp"
#include "lgc/rng.hpp"

using namespace lgc;

TEST_CASE("label_accuracy counts both sides of a hand-labeled split") {
  NodeSet target = NodeSet::range(0, 4);
  LabelAssignment labels = {1, 1, 1, 0, 0, 0, 0, 1};
  LabelAccuracy acc = label_accuracy(labels, target, 8);
  CHECK(acc.a1 == doctest::Approx(0.75));
  CHECK(acc.a0 == doctest::Approx(0.75));
  CHECK(acc.satisfies_assumption());

  LabelAssignment bad = {0, 0, 0, 0, 1, 1, 1, 1};
  LabelAccuracy acc2 = label_accuracy(bad, target, 8);
  CHECK(acc2.a1 == doctest::Approx(0.0));
  CHECK(acc2.a0 == doctest::Approx(0.0));
  CHECK_FALSE(acc2.satisfies_assumption());
}

TEST_CASE("label_accuracy validates its arguments") {
  LabelAssignment labels(8, 0);
  CHECK_THROWS_AS(label_accuracy(labels, NodeSet::range(0, 4), 9), std::invalid_argument);
  CHECK_THROWS_AS(label_accuracy(labels, NodeSet(), 8), std::invalid_argument);
  CHECK_THROWS_AS(label_accuracy(labels, NodeSet::range(0, 8), 8), std::invalid_argument);
}

TEST_CASE("generate_noisy_labels flips exactly the rounded counts") {
  auto rng = make_stream(42, 0);
  NodeSet target = NodeSet::range(0, 500);
  LabelAssignment labels = generate_noisy_labels(target, 10000, 0.7, 0.9, rng);
  // inside: round(0.1 * 500) = 50 flips, outside: round(0.3 * 9500) = 2850
  LabelAccuracy acc = label_accuracy(labels, target, 10000);
  CHECK(acc.a1 == doctest::Approx(450.0 / 500.0));
  CHECK(acc.a0 == doctest::Approx(6650.0 / 9500.0));
}

TEST_CASE("generate_noisy_labels rounds half-flips toward fewer") {
  auto rng = make_stream(1, 0);
  NodeSet target = NodeSet::range(0, 2);
  // (1 - 0.75) * 2 = 0.5 on both sides: flip nothing
  LabelAssignment labels = generate_noisy_labels(target, 4, 0.75, 0.75, rng);
  CHECK(labels == LabelAssignment{1, 1, 0, 0});
}

TEST_CASE("generate_noisy_labels is deterministic per stream") {
  auto rng1 = make_stream(9, 3);
  auto rng2 = make_stream(9, 3);
  NodeSet target = NodeSet::range(10, 60);
  CHECK(generate_noisy_labels(target, 200, 0.8, 0.8, rng1) ==
        generate_noisy_labels(target, 200, 0.8, 0.8, rng2));
}

TEST_CASE("generate_noisy_labels validates its arguments") {
  auto rng = make_stream(1, 0);
  CHECK_THROWS_AS(generate_noisy_labels(NodeSet(), 10, 0.9, 0.9, rng), std::invalid_argument);
  CHECK_THROWS_AS(generate_noisy_labels(NodeSet::range(0, 10), 10, 0.9, 0.9, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_noisy_labels(NodeSet::range(0, 2), 10, 1.5, 0.9, rng),
                  std::invalid_argument);
}

namespace {

Graph path_graph(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return Graph::build(n, edges);
}

}  // namespace

TEST_CASE("reweight scales exactly the cross-label edges") {
  Graph g = path_graph(3);
  LabelAssignment labels = {1, 0, 1};  // both edges cross

  SUBCASE("eps = 1 is the identity") { CHECK(reweight(g, labels, 1.0) == g); }

  SUBCASE("eps = 0 zeroes weights but keeps the topology") {
    Graph r = reweight(g, labels, 0.0);
    CHECK(r.degree(1) == 2);
    CHECK(r.weighted_degree(1) == doctest::Approx(0.0));
    CHECK(r.total_weight() == doctest::Approx(0.0));
    CHECK(r.edge_count() == 2);
  }

  SUBCASE("fractional eps scales crossing edges only") {
    LabelAssignment mixed = {1, 1, 0};  // edge 0-1 same, 1-2 cross
    Graph r = reweight(g, mixed, 0.25);
    CHECK(r.weighted_degree(0) == doctest::Approx(1.0));
    CHECK(r.weighted_degree(1) == doctest::Approx(1.25));
    CHECK(r.weighted_degree(2) == doctest::Approx(0.25));
  }
}

TEST_CASE("reweight validates its arguments") {
  Graph g = path_graph(3);
  LabelAssignment labels = {1, 0, 1};
  CHECK_THROWS_AS(reweight(g, labels, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(reweight(g, labels, 1.1), std::invalid_argument);
  CHECK_THROWS_AS(reweight(g, LabelAssignment{1, 0}, 0.5), std::invalid_argument);
}

TEST_CASE("label_support picks the matching ids") {
  LabelAssignment labels = {1, 0, 1, 1, 0};
  CHECK(label_support(labels, 1).ids() == std::vector<NodeId>{0, 2, 3});
  CHECK(label_support(labels, 0).ids() == std::vector<NodeId>{1, 4});
}

TEST_CASE("label files round-trip") {
  LabelAssignment labels = {1, 0, 0, 1, 1};
  std::string path = "test_labels_roundtrip.txt";
  write_labels(path, labels);
  CHECK(read_labels(path, 5) == labels);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_labels("does_not_exist_labels.txt", 5), std::runtime_error);
}

TEST_CASE("label-weighted view matches a materialized reweight") {
  auto rng = make_stream(7, 0);
  std::vector<Edge> edges;
  const NodeId n = 40;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (uniform01(rng) < 0.15) edges.push_back({u, v, 1.0 + uniform01(rng)});
  Graph g = Graph::build(n, edges);
  LabelAssignment labels(n, 0);
  for (NodeId i = 0; i < n; ++i) labels[i] = uniform01(rng) < 0.5 ? 1 : 0;

  for (double eps : {0.0, 0.05, 0.5}) {
    Graph dense = reweight(g, labels, eps);
    LabelWeightedView view(g, [&](NodeId i) { return labels[i]; }, eps);
    for (NodeId i = 0; i < n; ++i) {
      CHECK(view.weighted_degree(i) == doctest::Approx(dense.weighted_degree(i)));
      auto a = view.neighbors(i);
      auto b = dense.neighbors(i);
      REQUIRE(a.size() == b.size());
      for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(a[j].id == b[j].id);
        CHECK(a[j].weight == doctest::Approx(b[j].weight));
      }
    }
  }
}

TEST_CASE("label-weighted view only evaluates labels near queried nodes") {
  Graph g = path_graph(100);
  std::size_t calls = 0;
  LabelWeightedView view(
      g,
      [&calls](NodeId) -> std::uint8_t {
        ++calls;
        return 1;
      },
      0.5);
  CHECK(view.labels_evaluated() == 0);
  view.neighbors(50);
  // the queried node plus its two path neighbors
  CHECK(view.labels_evaluated() == 3);
  CHECK(calls == 3);
  view.weighted_degree(50);
  CHECK(calls == 3);  // memoized
  CHECK(view.node_count() == 100);
}
