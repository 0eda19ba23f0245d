#pragma once

#include <string>
#include <vector>

#include "lgc/classifier.hpp"
#include "lgc/graph.hpp"

namespace lgc {

struct Dataset {
  Graph graph;
  FeatureMatrix features;
  bool has_features = false;
  // cluster id -> members, sorted by cluster id
  std::vector<std::pair<int, NodeSet>> clusters;
  // dense id -> id used in the input files
  std::vector<long long> original_ids;

  const NodeSet* cluster(int id) const {
    for (const auto& [cid, members] : clusters)
      if (cid == id) return &members;
    return nullptr;
  }
};

// Edge list: two whitespace-separated integer ids per line, '#' starts a
// comment. Ids are remapped densely in order of first appearance; the map is
// kept in original_ids. Features: CSV with the original node id in the first
// column. Cluster labels: "node_id cluster_id" lines. Ids appearing in the
// feature or label file but not in the edge list are an error.
Dataset load_dataset(const std::string& edge_path, const std::string& feature_path = "",
                     const std::string& label_path = "");

void write_embedding(const std::string& path, const Embedding& x);

}  // namespace lgc
