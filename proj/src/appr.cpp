#include "lgc/appr.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

namespace lgc {

namespace {

struct ApprState {
  double p = 0.0;
  double r = 0.0;
  bool queued = false;
  bool received = false;
};

// Non-lazy push: the full residual of the popped node is distributed in one
// step, alpha * r_i into the estimate and (1 - alpha) * r_i onto neighbors.
template <class GraphT>
ApprResult run_appr(const GraphT& g, const PageRankConfig& cfg) {
  if (cfg.alpha <= 0.0 || cfg.alpha >= 1.0)
    throw std::invalid_argument("appr: alpha must lie in (0, 1)");
  if (cfg.rho < 0.0) throw std::invalid_argument("appr: rho must be nonnegative");
  if (cfg.seed_scores.empty()) throw std::invalid_argument("appr: empty seed scores");

  std::unordered_map<NodeId, ApprState> state;
  for (const auto& [i, score] : cfg.seed_scores) {
    if (i < 0 || i >= g.node_count()) throw std::out_of_range("appr: seed node out of range");
    if (score < 0.0) throw std::invalid_argument("appr: seed scores must be nonnegative");
    if (g.weighted_degree(i) <= 0.0)
      throw DegenerateSeed("appr: seed node " + std::to_string(i) +
                           " has zero weighted degree");
    auto& st = state[i];
    st.r += score;
    st.received = true;
  }

  auto settled = [&](NodeId i, const ApprState& st) {
    return st.r <= cfg.rho * g.weighted_degree(i) || st.r <= cfg.tolerance;
  };

  std::deque<NodeId> queue;
  for (auto& [i, st] : state)
    if (!settled(i, st)) {
      st.queued = true;
      queue.push_back(i);
    }

  std::uint64_t pushes = 0;
  while (!queue.empty()) {
    const NodeId i = queue.front();
    queue.pop_front();
    ApprState& st = state.at(i);
    st.queued = false;
    if (settled(i, st)) continue;
    if (pushes >= cfg.max_pushes)
      throw NonConvergence("appr: push budget of " + std::to_string(cfg.max_pushes) +
                           " exhausted");
    ++pushes;

    const double r = st.r;
    const double deg = g.weighted_degree(i);
    st.p += cfg.alpha * r;
    st.r = 0.0;
    const double spread = (1.0 - cfg.alpha) * r / deg;
    for (const auto& nb : g.neighbors(i)) {
      if (nb.weight <= 0.0) continue;
      ApprState& nst = state[nb.id];
      nst.r += spread * nb.weight;
      nst.received = true;
      if (!nst.queued && !settled(nb.id, nst)) {
        nst.queued = true;
        queue.push_back(nb.id);
      }
    }
  }

  ApprResult out;
  out.pushes = pushes;
  std::vector<NodeId> touched;
  touched.reserve(state.size());
  for (const auto& [i, st] : state) {
    if (st.p > 0.0) out.scores.values.push_back({i, st.p});
    if (st.r != 0.0) out.residual.push_back({i, st.r});
    if (st.received) touched.push_back(i);
  }
  std::sort(out.scores.values.begin(), out.scores.values.end());
  std::sort(out.residual.begin(), out.residual.end());
  out.scores.touched = NodeSet(std::move(touched));
  return out;
}

template <class GraphT>
AlphaSearchResult search_alpha(const GraphT& diffusion_graph, const Graph& sweep_graph,
                               const NodeSet& seeds, double fd_total_mass,
                               std::span<const double> alpha_grid) {
  if (seeds.empty()) throw std::invalid_argument("default_appr_config: empty seed set");
  if (fd_total_mass <= 0.0)
    throw std::invalid_argument("default_appr_config: source mass must be > 0");
  if (alpha_grid.empty())
    throw std::invalid_argument("default_appr_config: empty alpha grid");

  PageRankConfig base;
  base.rho = 1.0 / fd_total_mass;
  double seed_degree = 0.0;
  for (NodeId s : seeds) seed_degree += diffusion_graph.weighted_degree(s);
  if (seed_degree <= 0.0)
    throw DegenerateSeed("default_appr_config: seed set has zero weighted degree");
  for (NodeId s : seeds)
    base.seed_scores.push_back({s, diffusion_graph.weighted_degree(s) / seed_degree});

  std::vector<double> grid(alpha_grid.begin(), alpha_grid.end());
  std::sort(grid.begin(), grid.end());

  AlphaSearchResult best;
  bool found = false;
  for (double alpha : grid) {
    PageRankConfig cfg = base;
    cfg.alpha = alpha;
    ApprResult run = run_appr(diffusion_graph, cfg);
    if (run.scores.values.empty()) continue;
    SweepResult sweep = sweep_cut(sweep_graph, run.scores, true);
    if (!found || sweep.conductance < best.conductance) {
      best.config = cfg;
      best.alpha = alpha;
      best.conductance = sweep.conductance;
      best.result = std::move(run);
      best.sweep = std::move(sweep);
      found = true;
    }
  }
  if (!found)
    throw DegenerateSeed("default_appr_config: no alpha in the grid dispersed any mass");
  return best;
}

}  // namespace

ApprResult solve_appr(const Graph& g, const PageRankConfig& config) {
  return run_appr(g, config);
}

ApprResult solve_appr(const LabelWeightedView& view, const PageRankConfig& config) {
  return run_appr(view, config);
}

AlphaSearchResult default_appr_config(const Graph& diffusion_graph, const Graph& sweep_graph,
                                      const NodeSet& seeds, double fd_total_mass,
                                      std::span<const double> alpha_grid) {
  return search_alpha(diffusion_graph, sweep_graph, seeds, fd_total_mass, alpha_grid);
}

AlphaSearchResult default_appr_config(const LabelWeightedView& diffusion_graph,
                                      const Graph& sweep_graph, const NodeSet& seeds,
                                      double fd_total_mass,
                                      std::span<const double> alpha_grid) {
  return search_alpha(diffusion_graph, sweep_graph, seeds, fd_total_mass, alpha_grid);
}

}  // namespace lgc
