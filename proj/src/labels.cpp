#include "lgc/labels.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

#include "lgc/rng.hpp"

namespace lgc {

LabelAccuracy label_accuracy(const LabelAssignment& labels, const NodeSet& target,
                             NodeId node_count) {
  if (labels.size() != static_cast<std::size_t>(node_count))
    throw std::invalid_argument("label_accuracy: label count does not match node count");
  if (target.empty()) throw std::invalid_argument("label_accuracy: empty target cluster");
  if (target.size() >= static_cast<std::size_t>(node_count))
    throw std::invalid_argument("label_accuracy: target cluster covers every node");
  for (NodeId i : target)
    if (i < 0 || i >= node_count) throw std::out_of_range("label_accuracy: node id out of range");

  std::size_t ones_in = 0, ones_total = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) ones_total += labels[i] ? 1 : 0;
  for (NodeId i : target) ones_in += labels[i] ? 1 : 0;
  const std::size_t k = target.size();
  const std::size_t rest = static_cast<std::size_t>(node_count) - k;
  LabelAccuracy acc;
  acc.a1 = static_cast<double>(ones_in) / static_cast<double>(k);
  acc.a0 = static_cast<double>(rest - (ones_total - ones_in)) / static_cast<double>(rest);
  return acc;
}

namespace {

// round(x) with ties toward the smaller count.
std::size_t flip_count(double fraction, std::size_t size) {
  const double x = fraction * static_cast<double>(size);
  double c = std::ceil(x - 0.5);
  if (c < 0.0) c = 0.0;
  if (c > static_cast<double>(size)) c = static_cast<double>(size);
  return static_cast<std::size_t>(c);
}

// Marks `flips` entries of `pool` chosen uniformly without replacement.
void flip_uniform(std::vector<NodeId>& pool, std::size_t flips, LabelAssignment& labels,
                  std::uint8_t new_value, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < flips; ++i) {
    const std::size_t j = i + uniform_index(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
    labels[pool[i]] = new_value;
  }
}

}  // namespace

LabelAssignment generate_noisy_labels(const NodeSet& target, NodeId node_count,
                                      double a0, double a1, std::mt19937_64& rng) {
  if (a0 < 0.0 || a0 > 1.0 || a1 < 0.0 || a1 > 1.0)
    throw std::invalid_argument("generate_noisy_labels: accuracies must lie in [0, 1]");
  if (target.empty()) throw std::invalid_argument("generate_noisy_labels: empty target cluster");
  if (target.size() >= static_cast<std::size_t>(node_count))
    throw std::invalid_argument("generate_noisy_labels: target cluster covers every node");

  LabelAssignment labels(node_count, 0);
  for (NodeId i : target) {
    if (i < 0 || i >= node_count)
      throw std::out_of_range("generate_noisy_labels: node id out of range");
    labels[i] = 1;
  }

  std::vector<NodeId> inside(target.ids());
  std::vector<NodeId> outside;
  outside.reserve(static_cast<std::size_t>(node_count) - target.size());
  for (NodeId i = 0; i < node_count; ++i)
    if (!labels[i]) outside.push_back(i);

  flip_uniform(inside, flip_count(1.0 - a1, inside.size()), labels, 0, rng);
  flip_uniform(outside, flip_count(1.0 - a0, outside.size()), labels, 1, rng);
  return labels;
}

Graph reweight(const Graph& g, const LabelAssignment& labels, double eps) {
  if (labels.size() != static_cast<std::size_t>(g.node_count()))
    throw std::invalid_argument("reweight: label count does not match node count");
  if (eps < 0.0 || eps > 1.0)
    throw std::invalid_argument("reweight: eps must lie in [0, 1]");

  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (NodeId i = 0; i < g.node_count(); ++i)
    for (const Graph::Neighbor& nb : g.neighbors(i)) {
      if (nb.id <= i) continue;
      const double w = labels[i] == labels[nb.id] ? nb.weight : eps * nb.weight;
      edges.push_back({i, nb.id, w});
    }
  return Graph::build(g.node_count(), edges);
}

NodeSet label_support(const LabelAssignment& labels, std::uint8_t value) {
  std::vector<NodeId> ids;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == value) ids.push_back(static_cast<NodeId>(i));
  return NodeSet(std::move(ids));
}

LabelAssignment read_labels(const std::string& path, NodeId node_count) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_labels: cannot open " + path);
  LabelAssignment labels(node_count, 0);
  std::vector<bool> seen(node_count, false);
  long long id, value;
  std::size_t line = 0;
  while (in >> id >> value) {
    ++line;
    if (id < 0 || id >= node_count)
      throw std::runtime_error("read_labels: node id " + std::to_string(id) +
                               " out of range at entry " + std::to_string(line));
    if (value != 0 && value != 1)
      throw std::runtime_error("read_labels: label must be 0 or 1 at entry " +
                               std::to_string(line));
    labels[id] = static_cast<std::uint8_t>(value);
    seen[id] = true;
  }
  for (NodeId i = 0; i < node_count; ++i)
    if (!seen[i])
      throw std::runtime_error("read_labels: missing label for node " + std::to_string(i));
  return labels;
}

void write_labels(const std::string& path, const LabelAssignment& labels) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_labels: cannot open " + path);
  for (std::size_t i = 0; i < labels.size(); ++i)
    out << i << ' ' << static_cast<int>(labels[i]) << '\n';
}

LabelWeightedView::LabelWeightedView(const Graph& base,
                                     std::function<std::uint8_t(NodeId)> label_fn, double eps)
    : base_(&base), label_fn_(std::move(label_fn)), eps_(eps) {
  if (eps < 0.0 || eps > 1.0)
    throw std::invalid_argument("LabelWeightedView: eps must lie in [0, 1]");
}

std::uint8_t LabelWeightedView::label(NodeId id) const {
  auto it = labels_.find(id);
  if (it != labels_.end()) return it->second;
  const std::uint8_t v = label_fn_(id) ? 1 : 0;
  labels_.emplace(id, v);
  return v;
}

void LabelWeightedView::materialize(NodeId id) const {
  if (adj_.count(id)) return;
  const std::uint8_t own = label(id);
  std::vector<Graph::Neighbor> row;
  auto base_row = base_->neighbors(id);
  row.reserve(base_row.size());
  double deg = 0.0;
  for (const Graph::Neighbor& nb : base_row) {
    const double w = own == label(nb.id) ? nb.weight : eps_ * nb.weight;
    row.push_back({nb.id, w});
    deg += w;
  }
  degree_.emplace(id, deg);
  adj_.emplace(id, std::move(row));
}

std::span<const Graph::Neighbor> LabelWeightedView::neighbors(NodeId id) const {
  materialize(id);
  const auto& row = adj_.at(id);
  return {row.data(), row.size()};
}

double LabelWeightedView::weighted_degree(NodeId id) const {
  materialize(id);
  return degree_.at(id);
}

}  // namespace lgc
