#include "lgc/flow_diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lgc {

NodeSet support(const Embedding& x) {
  std::vector<NodeId> ids;
  ids.reserve(x.values.size());
  for (const auto& [i, v] : x.values) ids.push_back(i);
  return NodeSet(std::move(ids));
}

DiffusionResult solve_flow_diffusion(const DiffusionProblem& problem) {
  if (!problem.graph) throw std::invalid_argument("flow diffusion: missing graph");
  return detail::diffuse(*problem.graph, problem);
}

DiffusionResult solve_flow_diffusion(const LabelWeightedView& view,
                                     const DiffusionProblem& problem) {
  return detail::diffuse(view, problem);
}

// Projected gradient descent on f(x) = (1/2) x^T L x + x^T (T - Delta) over
// x >= 0, using the dense Laplacian.  A fixed step of 1 / (2 max_deg) bounds
// the spectral radius of L, so every step decreases the objective; a line
// search would stall once objective differences drop below double precision,
// which happens well before tight gradient targets are met.
Embedding qp_oracle(const DiffusionProblem& problem, std::uint64_t max_iters) {
  if (!problem.graph) throw std::invalid_argument("qp_oracle: missing graph");
  const Graph& g = *problem.graph;
  const NodeId n = g.node_count();
  if (n > 2000) throw std::invalid_argument("qp_oracle: limited to graphs with <= 2000 nodes");
  if (problem.source.empty()) throw std::invalid_argument("qp_oracle: empty source map");

  std::vector<double> delta(n, 0.0), sink(n, 0.0);
  for (const auto& [i, mass] : problem.source) {
    g.check_node(i);
    if (mass <= 0.0) throw std::invalid_argument("qp_oracle: source mass must be > 0");
    delta[i] += mass;
  }
  double max_deg = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    sink[i] = problem.sink.at(g, i);
    max_deg = std::max(max_deg, g.weighted_degree(i));
  }

  // Dense Laplacian row action, grad_i = (L x)_i + T_i - Delta_i.
  std::vector<std::vector<double>> lap(n, std::vector<double>(n, 0.0));
  for (NodeId i = 0; i < n; ++i) {
    lap[i][i] = g.weighted_degree(i);
    for (const auto& nb : g.neighbors(i)) lap[i][nb.id] -= nb.weight;
  }

  std::vector<double> x(n, 0.0), grad(n, 0.0), x_next(n, 0.0);
  const double target = problem.tolerance / 10.0;
  const double step = max_deg > 0.0 ? 1.0 / (2.0 * max_deg) : 1.0;

  for (std::uint64_t iter = 0; iter < max_iters; ++iter) {
    double pg_norm = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      double row = 0.0;
      for (NodeId j = 0; j < n; ++j) row += lap[i][j] * x[j];
      grad[i] = row + sink[i] - delta[i];
      const double pg = x[i] > 0.0 ? grad[i] : std::min(grad[i], 0.0);
      pg_norm = std::max(pg_norm, std::abs(pg));
    }
    if (pg_norm < target) break;
    if (iter + 1 == max_iters)
      throw NonConvergence("qp_oracle: iteration budget exhausted");

    for (NodeId i = 0; i < n; ++i)
      x_next[i] = std::max(0.0, x[i] - step * grad[i]);
    x.swap(x_next);
    if (*std::max_element(x.begin(), x.end()) > 1e12)
      throw InfeasibleDiffusion("qp_oracle: iterates diverge, problem is infeasible");
  }

  Embedding out;
  for (NodeId i = 0; i < n; ++i)
    if (x[i] > 0.0) out.values.push_back({i, x[i]});
  out.touched = NodeSet::range(0, n);
  return out;
}

}  // namespace lgc
