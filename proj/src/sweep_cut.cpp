#include "lgc/sweep_cut.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lgc {

SweepResult sweep_cut(const Graph& g, const Embedding& x, bool normalize_by_degree) {
  if (x.values.empty()) throw std::invalid_argument("sweep_cut: empty support");

  struct Scored {
    NodeId id;
    double score;
  };
  std::vector<Scored> order;
  order.reserve(x.values.size());
  for (const auto& [i, v] : x.values) {
    g.check_node(i);
    double score = v;
    if (normalize_by_degree) {
      const double deg = g.weighted_degree(i);
      if (deg > 0.0) score = v / deg;
    }
    order.push_back({i, score});
  }
  std::sort(order.begin(), order.end(), [](const Scored& a, const Scored& b) {
    return a.score != b.score ? a.score > b.score : a.id < b.id;
  });

  const double total_volume = g.volume();
  std::vector<char> inside(g.node_count(), 0);
  double cut = 0.0, vol = 0.0;
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_prefix = 0;

  for (std::size_t t = 0; t < order.size(); ++t) {
    const NodeId v_id = order[t].id;
    double to_inside = 0.0;
    for (const auto& nb : g.neighbors(v_id))
      if (inside[nb.id]) to_inside += nb.weight;
    cut += g.weighted_degree(v_id) - 2.0 * to_inside;
    vol += g.weighted_degree(v_id);
    inside[v_id] = 1;

    if (t + 1 == static_cast<std::size_t>(g.node_count())) break;  // prefix == V
    const double denom = std::min(vol, total_volume - vol);
    if (denom <= 0.0) continue;
    const double phi = cut / denom;
    if (phi < best) {
      best = phi;
      best_prefix = t + 1;
    }
  }

  if (best_prefix == 0)
    throw std::invalid_argument("sweep_cut: no prefix with positive volume");

  std::vector<NodeId> ids;
  ids.reserve(best_prefix);
  for (std::size_t t = 0; t < best_prefix; ++t) ids.push_back(order[t].id);
  return {NodeSet(std::move(ids)), best};
}

}  // namespace lgc
