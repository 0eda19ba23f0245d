#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "lgc/appr.hpp"
#include "lgc/labels.hpp"
#include "lgc/rng.hpp"

using namespace lgc;

namespace {

Graph random_graph(NodeId n, std::mt19937_64& rng, double p = 0.25) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 2; v < n; ++v)
      if (uniform01(rng) < p) edges.push_back({u, v, 1.0});
  return Graph::build(n, edges);
}

void check_contract(const Graph& g, const PageRankConfig& cfg, const ApprResult& res) {
  // every residual has settled
  for (const auto& [i, r] : res.residual) {
    CHECK(r >= 0.0);
    CHECK(r <= std::max(cfg.rho * g.weighted_degree(i), cfg.tolerance) + 1e-15);
  }
  // mass conservation: the push moves alpha r into p and (1 - alpha) r onward
  double total = 0.0;
  for (const auto& [i, v] : res.scores.values) total += v;
  for (const auto& [i, r] : res.residual) total += r;
  double seeded = 0.0;
  for (const auto& [i, s] : cfg.seed_scores) seeded += s;
  CHECK(total == doctest::Approx(seeded).epsilon(1e-9));
}

}  // namespace

TEST_CASE("single edge push trace") {
  Graph g = Graph::build(2, std::vector<Edge>{{0, 1, 1.0}});
  PageRankConfig cfg;
  cfg.alpha = 0.5;
  cfg.seed_scores = {{0, 1.0}};

  SUBCASE("rho stops after two pushes") {
    cfg.rho = 0.3;
    ApprResult res = solve_appr(g, cfg);
    CHECK(res.pushes == 2);
    CHECK(res.scores.value(0) == doctest::Approx(0.5));
    CHECK(res.scores.value(1) == doctest::Approx(0.25));
    REQUIRE(res.residual.size() == 1);
    CHECK(res.residual[0].first == 0);
    CHECK(res.residual[0].second == doctest::Approx(0.25));
    check_contract(g, cfg, res);
  }

  SUBCASE("looser rho stops after one push") {
    cfg.rho = 0.6;
    ApprResult res = solve_appr(g, cfg);
    CHECK(res.pushes == 1);
    CHECK(res.scores.value(0) == doctest::Approx(0.5));
    CHECK(res.scores.value(1) == doctest::Approx(0.0));
    REQUIRE(res.residual.size() == 1);
    CHECK(res.residual[0].first == 1);
    CHECK(res.residual[0].second == doctest::Approx(0.5));
  }
}

TEST_CASE("residual contract and conservation hold on random graphs") {
  auto rng = make_stream(201, 0);
  std::uint64_t total_pushes = 0;
  for (int inst = 0; inst < 10; ++inst) {
    const NodeId n = 15 + static_cast<NodeId>(uniform_index(rng, 20));
    Graph g = random_graph(n, rng);
    PageRankConfig cfg;
    cfg.alpha = 0.05 + 0.4 * uniform01(rng);
    cfg.rho = 1.0 / (5.0 + 40.0 * uniform01(rng));
    cfg.seed_scores = {{static_cast<NodeId>(uniform_index(rng, n)), 1.0}};
    ApprResult res = solve_appr(g, cfg);
    check_contract(g, cfg, res);
    total_pushes += res.pushes;

    // touched nodes carry score or residual mass, or neighbor a pushed node
    auto has_residual = [&](NodeId i) {
      for (const auto& [id, r] : res.residual)
        if (id == i) return r > 0.0;
      return false;
    };
    for (NodeId i : res.scores.touched) {
      bool near = res.scores.value(i) > 0.0 || has_residual(i);
      if (!near)
        for (const auto& nb : g.neighbors(i))
          if (res.scores.value(nb.id) > 0.0) near = true;
      CHECK(near);
    }
  }
  CHECK(total_pushes > 0);
}

TEST_CASE("appr over a label view matches the materialized reweight") {
  auto rng = make_stream(202, 0);
  Graph g = random_graph(20, rng);
  LabelAssignment labels(20, 0);
  for (auto& l : labels) l = uniform01(rng) < 0.5 ? 1 : 0;
  Graph dense = reweight(g, labels, 0.2);
  LabelWeightedView view(g, [&](NodeId i) { return labels[i]; }, 0.2);

  PageRankConfig cfg;
  cfg.alpha = 0.15;
  cfg.rho = 0.01;
  cfg.seed_scores = {{3, 1.0}};
  ApprResult a = solve_appr(dense, cfg);
  ApprResult b = solve_appr(view, cfg);
  CHECK(a.scores.values == b.scores.values);
  CHECK(a.pushes == b.pushes);
}

TEST_CASE("bad configurations are rejected") {
  Graph g = Graph::build(2, std::vector<Edge>{{0, 1, 1.0}});
  PageRankConfig cfg;
  cfg.seed_scores = {{0, 1.0}};
  cfg.alpha = 0.0;
  CHECK_THROWS_AS(solve_appr(g, cfg), std::invalid_argument);
  cfg.alpha = 1.0;
  CHECK_THROWS_AS(solve_appr(g, cfg), std::invalid_argument);
  cfg.alpha = 0.2;
  cfg.rho = -1.0;
  CHECK_THROWS_AS(solve_appr(g, cfg), std::invalid_argument);
  cfg.rho = 0.1;
  cfg.seed_scores = {};
  CHECK_THROWS_AS(solve_appr(g, cfg), std::invalid_argument);
  cfg.seed_scores = {{5, 1.0}};
  CHECK_THROWS_AS(solve_appr(g, cfg), std::out_of_range);
  cfg.seed_scores = {{0, -0.5}};
  CHECK_THROWS_AS(solve_appr(g, cfg), std::invalid_argument);

  Graph lonely = Graph::build(2, std::vector<Edge>{});
  cfg.seed_scores = {{0, 1.0}};
  CHECK_THROWS_AS(solve_appr(lonely, cfg), DegenerateSeed);
}

TEST_CASE("default config fills rho, seed scores and picks the smallest tied alpha") {
  Graph g = Graph::build(3, std::vector<Edge>{{0, 1, 1.0}, {1, 2, 1.0}});

  // On a 3-path from the middle both alphas sweep to conductance 1, so the
  // tie goes to the smaller one.
  const std::array<double, 2> grid = {0.5, 0.25};  // unsorted on purpose
  AlphaSearchResult res = default_appr_config(g, g, NodeSet(std::vector<NodeId>{1}), 4.0, grid);
  CHECK(res.config.rho == doctest::Approx(0.25));
  REQUIRE(res.config.seed_scores.size() == 1);
  CHECK(res.config.seed_scores[0].second == doctest::Approx(1.0));
  CHECK(res.alpha == doctest::Approx(0.25));
  CHECK(res.conductance == doctest::Approx(1.0));
  CHECK(res.sweep.cluster.ids() == std::vector<NodeId>{1});
}

TEST_CASE("default config splits seed scores by weighted degree") {
  std::vector<Edge> edges = {{0, 1, 1.0}, {1, 2, 1.0}};
  Graph g = Graph::build(3, edges);  // degrees 1, 2, 1
  const std::array<double, 1> grid = {0.2};
  AlphaSearchResult res =
      default_appr_config(g, g, NodeSet(std::vector<NodeId>{0, 1}), 10.0, grid);
  REQUIRE(res.config.seed_scores.size() == 2);
  CHECK(res.config.seed_scores[0].first == 0);
  CHECK(res.config.seed_scores[0].second == doctest::Approx(1.0 / 3.0));
  CHECK(res.config.seed_scores[1].second == doctest::Approx(2.0 / 3.0));
  CHECK(res.config.rho == doctest::Approx(0.1));
}

TEST_CASE("default config rejects degenerate inputs") {
  Graph g = Graph::build(3, std::vector<Edge>{{0, 1, 1.0}});
  const std::array<double, 1> grid = {0.2};
  CHECK_THROWS_AS(default_appr_config(g, g, NodeSet(), 2.0, grid), std::invalid_argument);
  CHECK_THROWS_AS(default_appr_config(g, g, NodeSet(std::vector<NodeId>{0}), 0.0, grid),
                  std::invalid_argument);
  CHECK_THROWS_AS(default_appr_config(g, g, NodeSet(std::vector<NodeId>{0}), 2.0,
                                      std::span<const double>{}),
                  std::invalid_argument);
  // node 2 is isolated
  CHECK_THROWS_AS(default_appr_config(g, g, NodeSet(std::vector<NodeId>{2}), 2.0, grid),
                  DegenerateSeed);
}
