#include "lgc/dataset.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lgc {

namespace {

[[noreturn]] void fail(const std::string& path, size_t line, const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

}  // namespace

Dataset load_dataset(const std::string& edge_path, const std::string& feature_path,
                     const std::string& label_path) {
  Dataset ds;
  std::map<long long, NodeId> id_map;
  auto dense_id = [&](long long orig) {
    auto [it, fresh] = id_map.try_emplace(orig, static_cast<NodeId>(ds.original_ids.size()));
    if (fresh) ds.original_ids.push_back(orig);
    return it->second;
  };

  std::vector<Edge> edges;
  {
    std::ifstream in = open_or_throw(edge_path);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream ss(strip_comment(line));
      long long u, v;
      if (!(ss >> u)) continue;  // blank or comment-only line
      if (!(ss >> v)) fail(edge_path, lineno, "expected two node ids");
      double w = 1.0;
      ss >> w;  // optional weight column
      std::string extra;
      if (ss >> extra) fail(edge_path, lineno, "trailing tokens after edge");
      edges.push_back({dense_id(u), dense_id(v), w});
    }
  }
  if (edges.empty()) throw std::runtime_error(edge_path + ": no edges");
  NodeId n = static_cast<NodeId>(ds.original_ids.size());
  ds.graph = Graph::build(n, edges);

  auto lookup = [&](long long orig, const std::string& path, size_t lineno) {
    auto it = id_map.find(orig);
    if (it == id_map.end())
      fail(path, lineno, "node id " + std::to_string(orig) + " not present in the edge list");
    return it->second;
  };

  if (!feature_path.empty()) {
    std::ifstream in = open_or_throw(feature_path);
    std::string line;
    size_t lineno = 0;
    int dims = -1;
    std::vector<uint8_t> seen(n, 0);
    std::vector<double> rows;
    while (std::getline(in, line)) {
      ++lineno;
      std::string body = strip_comment(line);
      if (body.find_first_not_of(" \t\r,") == std::string::npos) continue;
      std::replace(body.begin(), body.end(), ',', ' ');
      std::istringstream ss(body);
      long long orig;
      if (!(ss >> orig)) fail(feature_path, lineno, "expected a node id");
      NodeId id = lookup(orig, feature_path, lineno);
      std::vector<double> vals;
      double v;
      while (ss >> v) vals.push_back(v);
      if (!ss.eof()) fail(feature_path, lineno, "malformed feature value");
      if (vals.empty()) fail(feature_path, lineno, "row has no feature values");
      if (dims < 0) {
        dims = static_cast<int>(vals.size());
        rows.assign(static_cast<size_t>(n) * dims, 0.0);
      } else if (static_cast<int>(vals.size()) != dims) {
        fail(feature_path, lineno, "inconsistent feature count");
      }
      if (seen[id]) fail(feature_path, lineno, "duplicate feature row");
      seen[id] = 1;
      std::copy(vals.begin(), vals.end(), rows.begin() + static_cast<size_t>(id) * dims);
    }
    for (NodeId i = 0; i < n; ++i)
      if (!seen[i])
        throw std::runtime_error(feature_path + ": missing feature row for node id " +
                                 std::to_string(ds.original_ids[i]));
    ds.features.dims = dims;
    ds.features.data = std::move(rows);
    ds.has_features = true;
  }

  if (!label_path.empty()) {
    std::ifstream in = open_or_throw(label_path);
    std::string line;
    size_t lineno = 0;
    std::map<int, std::vector<NodeId>> groups;
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream ss(strip_comment(line));
      long long orig;
      int cluster;
      if (!(ss >> orig)) continue;
      if (!(ss >> cluster)) fail(label_path, lineno, "expected \"node_id cluster_id\"");
      std::string extra;
      if (ss >> extra) fail(label_path, lineno, "trailing tokens after cluster id");
      groups[cluster].push_back(lookup(orig, label_path, lineno));
    }
    for (auto& [cid, members] : groups)
      ds.clusters.emplace_back(cid, NodeSet(std::move(members)));
  }

  return ds;
}

void write_embedding(const std::string& path, const Embedding& x) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  char buf[64];
  for (const auto& [id, v] : x.values) {
    std::snprintf(buf, sizeof(buf), "%d %.12g\n", id, v);
    out << buf;
  }
}

}  // namespace lgc
