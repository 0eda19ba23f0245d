#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lgc/flow_diffusion.hpp"
#include "lgc/graph.hpp"
#include "lgc/sweep_cut.hpp"

namespace lgc {

// A seed with zero weighted degree cannot disperse any mass.
struct DegenerateSeed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PageRankConfig {
  double alpha = 0.1;  // teleportation probability in (0, 1)
  double rho = 1e-4;   // l1 penalty; a node settles once r_i <= rho * weighted_degree(i)
  std::vector<std::pair<NodeId, double>> seed_scores;  // nonnegative initial residual
  double tolerance = 1e-12;  // residuals at or below this never re-enter the queue
  std::uint64_t max_pushes = 100'000'000;
};

struct ApprResult {
  Embedding scores;                                 // p, the PageRank estimate
  std::vector<std::pair<NodeId, double>> residual;  // r at termination, sorted by id
  std::uint64_t pushes = 0;
};

ApprResult solve_appr(const Graph& g, const PageRankConfig& config);
ApprResult solve_appr(const LabelWeightedView& view, const PageRankConfig& config);

struct AlphaSearchResult {
  PageRankConfig config;
  double alpha = 0.0;
  double conductance = 0.0;
  ApprResult result;  // the run at the winning alpha
  SweepResult sweep;
};

// Fills in the defaults used by the experiments: seed scores proportional to
// weighted degree summing to one, rho equal to the inverse of the flow
// diffusion source mass, and the teleportation alpha chosen from the grid by
// minimizing the downstream sweep-cut conductance (ties favor the smaller
// alpha).  The sweep runs on sweep_graph, which is the unweighted original
// even when diffusion_graph is label-reweighted.
AlphaSearchResult default_appr_config(const Graph& diffusion_graph, const Graph& sweep_graph,
                                      const NodeSet& seeds, double fd_total_mass,
                                      std::span<const double> alpha_grid);
AlphaSearchResult default_appr_config(const LabelWeightedView& diffusion_graph,
                                      const Graph& sweep_graph, const NodeSet& seeds,
                                      double fd_total_mass,
                                      std::span<const double> alpha_grid);

}  // namespace lgc
