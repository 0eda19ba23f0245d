#include "lgc/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace lgc {

NodeSet::NodeSet(std::vector<NodeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

NodeSet NodeSet::range(NodeId first, NodeId last) {
  NodeSet s;
  s.ids_.reserve(last > first ? static_cast<std::size_t>(last - first) : 0);
  for (NodeId i = first; i < last; ++i) s.ids_.push_back(i);
  return s;
}

bool NodeSet::contains(NodeId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

namespace {

struct AdjEntry {
  NodeId id;
  double weight;
  std::uint32_t seq;  // input order, used to keep the last duplicate
};

}  // namespace

Graph Graph::build(NodeId node_count, std::span<const Edge> edges) {
  if (node_count < 0) throw std::invalid_argument("graph: negative node count");
  Graph g;
  g.n_ = node_count;

  // Count directed slots, skipping self-loops.
  std::vector<std::size_t> counts(static_cast<std::size_t>(node_count) + 1, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= node_count || e.v < 0 || e.v >= node_count)
      throw std::out_of_range("graph: edge endpoint " +
                              std::to_string(e.u < 0 || e.u >= node_count ? e.u : e.v) +
                              " outside [0, " + std::to_string(node_count) + ")");
    if (e.weight < 0.0) throw std::invalid_argument("graph: negative edge weight");
    if (e.u == e.v) continue;
    ++counts[static_cast<std::size_t>(e.u) + 1];
    ++counts[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t i = 1; i < counts.size(); ++i) counts[i] += counts[i - 1];

  std::vector<AdjEntry> slots(counts.back());
  std::vector<std::size_t> cursor(counts.begin(), counts.end() - 1);
  std::uint32_t seq = 0;
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    slots[cursor[e.u]++] = {e.v, e.weight, seq};
    slots[cursor[e.v]++] = {e.u, e.weight, seq};
    ++seq;
  }

  g.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
  g.adj_.reserve(slots.size());
  for (NodeId i = 0; i < node_count; ++i) {
    auto begin = slots.begin() + static_cast<std::ptrdiff_t>(counts[i]);
    auto end = slots.begin() + static_cast<std::ptrdiff_t>(counts[static_cast<std::size_t>(i) + 1]);
    std::sort(begin, end, [](const AdjEntry& a, const AdjEntry& b) {
      return a.id != b.id ? a.id < b.id : a.seq < b.seq;
    });
    for (auto it = begin; it != end; ++it) {
      if (std::next(it) != end && std::next(it)->id == it->id) continue;  // keep last duplicate
      g.adj_.push_back({it->id, it->weight});
    }
    g.offsets_[static_cast<std::size_t>(i) + 1] = g.adj_.size();
  }

  g.weighted_degree_.assign(node_count, 0.0);
  for (NodeId i = 0; i < node_count; ++i) {
    double d = 0.0;
    for (const Neighbor& nb : g.neighbors(i)) d += nb.weight;
    g.weighted_degree_[i] = d;
    g.total_weight_ += d;
  }
  g.total_weight_ /= 2.0;
  g.edge_count_ = g.adj_.size() / 2;
  return g;
}

void Graph::check_node(NodeId id) const {
  if (id < 0 || id >= n_)
    throw std::out_of_range("graph: node " + std::to_string(id) + " outside [0, " +
                            std::to_string(n_) + ")");
}

std::span<const Graph::Neighbor> Graph::neighbors(NodeId id) const {
  check_node(id);
  return {adj_.data() + offsets_[id], adj_.data() + offsets_[static_cast<std::size_t>(id) + 1]};
}

std::size_t Graph::degree(NodeId id) const {
  check_node(id);
  return offsets_[static_cast<std::size_t>(id) + 1] - offsets_[id];
}

double Graph::weighted_degree(NodeId id) const {
  check_node(id);
  return weighted_degree_[id];
}

SetStats set_stats(const Graph& g, const NodeSet& s) {
  if (s.empty()) throw std::invalid_argument("set_stats: empty node set");
  if (s.size() >= static_cast<std::size_t>(g.node_count()) && g.node_count() > 0)
    throw std::invalid_argument("set_stats: conductance undefined for the full vertex set");

  SetStats out;
  double internal_weight = 0.0;
  for (NodeId i : s) {
    g.check_node(i);
    out.vol += g.weighted_degree(i);
    for (const Graph::Neighbor& nb : g.neighbors(i))
      if (s.contains(nb.id)) internal_weight += nb.weight;
  }
  internal_weight /= 2.0;  // every internal edge was seen from both ends
  out.internal_vol = 2.0 * internal_weight;
  out.cut = out.vol - out.internal_vol;
  const double denom = std::min(out.vol, g.volume() - out.vol);
  out.conductance = denom > 0.0 ? out.cut / denom
                                : std::numeric_limits<double>::quiet_NaN();
  return out;
}

}  // namespace lgc
