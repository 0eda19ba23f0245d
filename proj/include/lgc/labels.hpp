#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "lgc/graph.hpp"

namespace lgc {

// One binary label per node.
using LabelAssignment = std::vector<std::uint8_t>;

struct LabelAccuracy {
  double a1 = 0.0;  // fraction of the target cluster labeled 1
  double a0 = 0.0;  // fraction of the complement labeled 0
  bool satisfies_assumption() const { return a0 >= 0.5 && a1 >= 0.5; }
};

LabelAccuracy label_accuracy(const LabelAssignment& labels, const NodeSet& target,
                             NodeId node_count);

// Labels the target 1 and the complement 0, then flips exactly
// round((1-a1)|K|) labels inside the target and round((1-a0)|V\K|) outside,
// chosen uniformly without replacement.  Rounding ties flip fewer labels.
LabelAssignment generate_noisy_labels(const NodeSet& target, NodeId node_count,
                                      double a0, double a1, std::mt19937_64& rng);

// Multiplies the weight of every edge whose endpoint labels differ by eps.
// eps = 1 returns the graph unchanged; eps = 0 zeroes cross-label edges but
// keeps them in the topology.
Graph reweight(const Graph& g, const LabelAssignment& labels, double eps);

// Nodes carrying the given label value.
NodeSet label_support(const LabelAssignment& labels, std::uint8_t value);

// File format: one "node_id label" pair per line, labels in {0, 1}.
LabelAssignment read_labels(const std::string& path, NodeId node_count);
void write_labels(const std::string& path, const LabelAssignment& labels);

// Adjacency of a base graph under label reweighting where labels come from a
// callback and are memoized.  Only nodes whose adjacency or degree is
// requested ever get their label (and their neighbors' labels) evaluated, so
// diffusion over the view stays local.
class LabelWeightedView {
 public:
  LabelWeightedView(const Graph& base, std::function<std::uint8_t(NodeId)> label_fn,
                    double eps);

  NodeId node_count() const { return base_->node_count(); }
  std::span<const Graph::Neighbor> neighbors(NodeId id) const;
  double weighted_degree(NodeId id) const;
  std::size_t labels_evaluated() const { return labels_.size(); }

 private:
  std::uint8_t label(NodeId id) const;
  void materialize(NodeId id) const;

  const Graph* base_;
  std::function<std::uint8_t(NodeId)> label_fn_;
  double eps_;
  mutable std::unordered_map<NodeId, std::vector<Graph::Neighbor>> adj_;
  mutable std::unordered_map<NodeId, double> degree_;
  mutable std::unordered_map<NodeId, std::uint8_t> labels_;
};

}  // namespace lgc
