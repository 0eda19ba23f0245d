#pragma once

#include <random>
#include <vector>

#include "lgc/graph.hpp"

namespace lgc {

// Structure of the complement outside the planted cluster.
struct OutsidePolicy {
  enum class Kind { None, ErdosRenyi, SbmBlocks } kind = Kind::None;
  double er_q = 0.0;       // ErdosRenyi: edge probability among outside pairs
  NodeId block_size = 0;   // SbmBlocks: outside nodes form blocks of this size
  double block_p = 0.0;    // within-block probability
  double block_q = 0.0;    // across-block probability

  static OutsidePolicy none() { return {}; }
  static OutsidePolicy erdos_renyi(double q);
  static OutsidePolicy sbm_blocks(NodeId block_size, double p, double q);
};

// Planted-cluster model: K = {0, ..., k-1}; pairs inside K are edges with
// probability p, pairs between K and the complement with probability q, and
// the complement is wired according to `outside`.
struct ModelSpec {
  NodeId n = 0;
  NodeId k = 0;
  double p = 0.0;
  double q = 0.0;
  OutsidePolicy outside;
  bool shuffle_ids = false;  // relabel nodes by a random permutation

  void validate() const;
};

struct LocalModelGraph {
  Graph graph;
  NodeSet target;                   // the planted cluster after any relabeling
  std::vector<NodeId> permutation;  // original id -> emitted id (identity when not shuffled)
};

LocalModelGraph generate_local_model(const ModelSpec& spec, std::mt19937_64& rng);

// Stochastic block model with c contiguous blocks of k nodes each.
struct SbmGraph {
  Graph graph;
  std::vector<NodeSet> clusters;
};

SbmGraph generate_sbm(NodeId k, NodeId c, double p, double q, std::mt19937_64& rng);

// gamma = p (k-1) / (q (n-k)), the ratio of expected internal to external
// degree for a node of the planted cluster.
double structural_signal(NodeId n, NodeId k, double p, double q);

}  // namespace lgc
