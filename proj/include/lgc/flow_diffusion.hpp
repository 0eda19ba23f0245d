#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lgc/graph.hpp"
#include "lgc/labels.hpp"

namespace lgc {

struct DiffusionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The positive-weight component(s) reachable from the sources cannot absorb
// the injected mass.
struct InfeasibleDiffusion : DiffusionError {
  using DiffusionError::DiffusionError;
};

// Push budget exhausted before the termination contract was met.
struct NonConvergence : DiffusionError {
  using DiffusionError::DiffusionError;
};

// Per-node sink capacity T: either a uniform value or a multiple of the
// weighted degree, with sparse per-node overrides on top.
class SinkCapacity {
 public:
  SinkCapacity() = default;

  static SinkCapacity uniform(double value = 1.0) {
    if (value < 0.0) throw std::invalid_argument("sink capacity must be nonnegative");
    SinkCapacity s;
    s.scale_ = value;
    return s;
  }

  static SinkCapacity degree(double scale = 1.0) {
    if (scale < 0.0) throw std::invalid_argument("sink capacity must be nonnegative");
    SinkCapacity s;
    s.degree_based_ = true;
    s.scale_ = scale;
    return s;
  }

  void set_override(NodeId id, double value) {
    if (value < 0.0) throw std::invalid_argument("sink capacity must be nonnegative");
    auto it = std::lower_bound(overrides_.begin(), overrides_.end(), id,
                               [](const auto& a, NodeId b) { return a.first < b; });
    if (it != overrides_.end() && it->first == id)
      it->second = value;
    else
      overrides_.insert(it, {id, value});
  }

  template <class GraphT>
  double at(const GraphT& g, NodeId id) const {
    auto it = std::lower_bound(overrides_.begin(), overrides_.end(), id,
                               [](const auto& a, NodeId b) { return a.first < b; });
    if (it != overrides_.end() && it->first == id) return it->second;
    return degree_based_ ? scale_ * g.weighted_degree(id) : scale_;
  }

  bool degree_based() const { return degree_based_; }
  double scale() const { return scale_; }

 private:
  bool degree_based_ = false;
  double scale_ = 1.0;
  std::vector<std::pair<NodeId, double>> overrides_;
};

struct DiffusionProblem {
  const Graph* graph = nullptr;
  std::vector<std::pair<NodeId, double>> source;  // mass Delta, entries > 0
  SinkCapacity sink;                              // defaults to T = 1
  double tolerance = 1e-6;
  std::uint64_t max_pushes = 100'000'000;
  // Walk the positive-weight components reachable from the sources up front
  // and fail fast when their capacity is short.  Touches the whole reachable
  // component, so it is off by default to preserve locality.
  bool eager_feasibility_check = false;
  // Resume from the solution of an earlier run with source mass at most the
  // current one (entrywise).  The push loop converges upward from any such
  // subsolution, which makes ascending mass grids cheap.
  const struct Embedding* warm_start = nullptr;
};

// Sparse node embedding: the positive entries of x plus the set of nodes the
// solver ever examined.
struct Embedding {
  std::vector<std::pair<NodeId, double>> values;  // sorted by id, values > 0
  NodeSet touched;

  double value(NodeId id) const {
    auto it = std::lower_bound(values.begin(), values.end(), id,
                               [](const auto& a, NodeId b) { return a.first < b; });
    return it != values.end() && it->first == id ? it->second : 0.0;
  }
  std::size_t support_size() const { return values.size(); }
};

NodeSet support(const Embedding& x);

struct DiffusionResult {
  Embedding embedding;
  std::uint64_t pushes = 0;
  double total_source_mass = 0.0;
};

namespace detail {

// Node state held sparsely while the push loop runs.
struct PushState {
  double x = 0.0;
  double mass = 0.0;
  double sink = 0.0;
  bool queued = false;
  bool received = false;  // took part in a push, as pusher or receiver
};

template <class GraphT>
void check_feasible_components(const GraphT& g, const DiffusionProblem& p) {
  std::unordered_map<NodeId, char> visited;
  std::vector<NodeId> stack;
  for (const auto& [s, mass] : p.source) {
    if (visited.count(s)) continue;
    // Collect the positive-weight component around s.
    double capacity = 0.0, injected = 0.0;
    stack.push_back(s);
    visited.emplace(s, 1);
    std::vector<NodeId> component;
    while (!stack.empty()) {
      const NodeId i = stack.back();
      stack.pop_back();
      component.push_back(i);
      capacity += p.sink.at(g, i);
      for (const auto& nb : g.neighbors(i)) {
        if (nb.weight <= 0.0 || visited.count(nb.id)) continue;
        visited.emplace(nb.id, 1);
        stack.push_back(nb.id);
      }
    }
    for (const auto& [t, mass2] : p.source)
      if (visited.count(t) && visited[t] == 1) injected += mass2;
    for (NodeId i : component) visited[i] = 2;  // counted once
    if (injected > capacity)
      throw InfeasibleDiffusion("flow diffusion: component reachable from node " +
                                std::to_string(s) + " absorbs at most " +
                                std::to_string(capacity) + " but receives " +
                                std::to_string(injected));
  }
}

// FIFO push solver for min (1/2) x^T L x + x^T (T - Delta) over x >= 0.
// Each pop settles one node by exact coordinate minimization; neighbors whose
// net mass newly exceeds their capacity are enqueued.
template <class GraphT>
DiffusionResult diffuse(const GraphT& g, const DiffusionProblem& p) {
  if (p.tolerance <= 0.0) throw std::invalid_argument("flow diffusion: tolerance must be > 0");
  if (p.source.empty()) throw std::invalid_argument("flow diffusion: empty source map");

  std::unordered_map<NodeId, PushState> state;
  auto node_state = [&](NodeId i) -> PushState& {
    auto [it, fresh] = state.try_emplace(i);
    if (fresh) it->second.sink = p.sink.at(g, i);
    return it->second;
  };

  double total_mass = 0.0;
  for (const auto& [i, mass] : p.source) {
    if (i < 0 || i >= g.node_count())
      throw std::out_of_range("flow diffusion: source node out of range");
    if (mass <= 0.0) throw std::invalid_argument("flow diffusion: source mass must be > 0");
    node_state(i).mass += mass;
    total_mass += mass;
  }
  if (total_mass <= 0.0) throw std::invalid_argument("flow diffusion: total source mass is 0");

  if (p.eager_feasibility_check) check_feasible_components(g, p);

  const double tau = p.tolerance;
  std::deque<NodeId> queue;
  if (p.warm_start != nullptr) {
    for (const auto& [i, xi] : p.warm_start->values) {
      if (i < 0 || i >= g.node_count())
        throw std::out_of_range("flow diffusion: warm start node out of range");
      if (xi <= 0.0) continue;
      PushState& st = node_state(i);
      st.x = xi;
      st.mass -= g.weighted_degree(i) * xi;
      for (const auto& nb : g.neighbors(i)) {
        if (nb.weight <= 0.0) continue;
        node_state(nb.id).mass += nb.weight * xi;
      }
    }
    for (NodeId i : p.warm_start->touched) node_state(i).received = true;
    for (auto& [i, st] : state) {
      if (!st.queued && st.mass > st.sink + tau) {
        st.queued = true;
        queue.push_back(i);
      }
    }
    std::sort(queue.begin(), queue.end());
  } else {
    for (const auto& [i, mass] : p.source) {
      PushState& st = state.at(i);
      if (!st.queued && st.mass > st.sink + tau) {
        st.queued = true;
        queue.push_back(i);
      }
    }
  }

  std::uint64_t pushes = 0;
  while (!queue.empty()) {
    const NodeId i = queue.front();
    queue.pop_front();
    PushState& st = state.at(i);
    st.queued = false;
    const double excess = st.mass - st.sink;
    if (excess <= tau) continue;

    const double deg = g.weighted_degree(i);
    if (deg <= 0.0)
      throw InfeasibleDiffusion("flow diffusion: node " + std::to_string(i) +
                                " holds excess mass but has zero weighted degree");
    if (pushes >= p.max_pushes)
      throw NonConvergence("flow diffusion: push budget of " + std::to_string(p.max_pushes) +
                           " exhausted");
    ++pushes;

    const double delta = excess / deg;
    st.x += delta;
    st.mass = st.sink;
    st.received = true;
    for (const auto& nb : g.neighbors(i)) {
      if (nb.weight <= 0.0) continue;
      PushState& nst = node_state(nb.id);
      nst.mass += delta * nb.weight;
      nst.received = true;
      if (!nst.queued && nst.mass > nst.sink + tau) {
        nst.queued = true;
        queue.push_back(nb.id);
      }
    }
  }

  DiffusionResult out;
  out.pushes = pushes;
  out.total_source_mass = total_mass;
  std::vector<NodeId> touched;
  touched.reserve(state.size());
  for (const auto& [i, st] : state) {
    if (st.x > 0.0) out.embedding.values.push_back({i, st.x});
    // Sources that never took part in a push were only inspected at setup
    // and do not count as touched.
    if (st.received) touched.push_back(i);
  }
  std::sort(out.embedding.values.begin(), out.embedding.values.end());
  out.embedding.touched = NodeSet(std::move(touched));
  return out;
}

}  // namespace detail

DiffusionResult solve_flow_diffusion(const DiffusionProblem& problem);
DiffusionResult solve_flow_diffusion(const LabelWeightedView& view,
                                     const DiffusionProblem& problem);

// Dense projected-gradient reference solver for the same objective, intended
// as an independent check of the push solver on graphs with <= 2000 nodes.
// Runs until the projected gradient falls below tolerance / 10.
Embedding qp_oracle(const DiffusionProblem& problem, std::uint64_t max_iters = 200'000'000);

}  // namespace lgc
