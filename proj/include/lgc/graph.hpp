#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lgc {

using NodeId = std::int32_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;
};

// Sorted set of node ids without duplicates.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<NodeId> ids);
  static NodeSet range(NodeId first, NodeId last);  // ids in [first, last)

  bool contains(NodeId id) const;
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<NodeId>& ids() const { return ids_; }
  std::vector<NodeId>::const_iterator begin() const { return ids_.begin(); }
  std::vector<NodeId>::const_iterator end() const { return ids_.end(); }
  bool operator==(const NodeSet&) const = default;

 private:
  std::vector<NodeId> ids_;
};

// Undirected weighted graph stored as per-node adjacency sorted by neighbor
// id.  Self-loops are dropped at build time, duplicate pairs are collapsed
// keeping the last weight seen, and zero-weight edges stay in the topology.
class Graph {
 public:
  struct Neighbor {
    NodeId id;
    double weight;
    bool operator==(const Neighbor&) const = default;
  };

  Graph() = default;
  static Graph build(NodeId node_count, std::span<const Edge> edges);

  NodeId node_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  double total_weight() const { return total_weight_; }
  double volume() const { return 2.0 * total_weight_; }

  std::span<const Neighbor> neighbors(NodeId id) const;
  std::size_t degree(NodeId id) const;
  double weighted_degree(NodeId id) const;

  void check_node(NodeId id) const;  // throws std::out_of_range
  bool operator==(const Graph&) const = default;

 private:
  NodeId n_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adj_;
  std::vector<double> weighted_degree_;
  std::size_t edge_count_ = 0;
  double total_weight_ = 0.0;
};

struct SetStats {
  double cut = 0.0;
  double vol = 0.0;
  double internal_vol = 0.0;  // volume of S inside the induced subgraph G[S]
  double conductance = 0.0;
};

// Throws std::invalid_argument when S is empty or S = V, and
// std::out_of_range when S contains an id outside the graph.
SetStats set_stats(const Graph& g, const NodeSet& s);

}  // namespace lgc
