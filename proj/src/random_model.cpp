#include "lgc/random_model.hpp"

#include <cmath>
#include <stdexcept>

#include "lgc/rng.hpp"

namespace lgc {

OutsidePolicy OutsidePolicy::erdos_renyi(double q) {
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("outside policy: q must lie in [0, 1]");
  OutsidePolicy p;
  p.kind = Kind::ErdosRenyi;
  p.er_q = q;
  return p;
}

OutsidePolicy OutsidePolicy::sbm_blocks(NodeId block_size, double p, double q) {
  if (block_size <= 0) throw std::invalid_argument("outside policy: block size must be > 0");
  if (p < 0.0 || p > 1.0 || q < 0.0 || q > 1.0)
    throw std::invalid_argument("outside policy: probabilities must lie in [0, 1]");
  OutsidePolicy o;
  o.kind = Kind::SbmBlocks;
  o.block_size = block_size;
  o.block_p = p;
  o.block_q = q;
  return o;
}

void ModelSpec::validate() const {
  if (k < 2 || k >= n) throw std::invalid_argument("model spec: need 2 <= k < n");
  if (p < 0.0 || p > 1.0 || q < 0.0 || q > p)
    throw std::invalid_argument("model spec: need 0 <= q <= p <= 1");
  if (outside.kind == OutsidePolicy::Kind::SbmBlocks && (n - k) % outside.block_size != 0)
    throw std::invalid_argument("model spec: outside block size must divide n - k");
}

namespace {

// Emits each pair (a, b) with a in [row_begin, row_end), b in
// [col_begin, col_end), a < b when the ranges overlap, independently with
// probability prob.  Geometric skipping keeps the cost linear in the number
// of emitted edges.
void sample_pairs(NodeId row_begin, NodeId row_end, NodeId col_begin, NodeId col_end,
                  double prob, std::mt19937_64& rng, std::vector<Edge>& out) {
  if (prob <= 0.0) return;
  for (NodeId a = row_begin; a < row_end; ++a) {
    const NodeId first = col_begin > a + 1 ? col_begin : a + 1;
    if (first >= col_end) continue;
    const std::uint64_t row_len = static_cast<std::uint64_t>(col_end - first);
    std::uint64_t pos = geometric_skip(rng, prob);
    while (pos < row_len) {
      out.push_back({a, static_cast<NodeId>(first + static_cast<NodeId>(pos)), 1.0});
      pos += 1 + geometric_skip(rng, prob);
    }
  }
}

}  // namespace

LocalModelGraph generate_local_model(const ModelSpec& spec, std::mt19937_64& rng) {
  spec.validate();
  std::vector<Edge> edges;
  const double expected = spec.p * spec.k * (spec.k - 1) / 2.0 +
                          spec.q * static_cast<double>(spec.k) * (spec.n - spec.k);
  edges.reserve(static_cast<std::size_t>(expected * 1.1) + 64);

  sample_pairs(0, spec.k, 0, spec.k, spec.p, rng, edges);          // inside K
  sample_pairs(0, spec.k, spec.k, spec.n, spec.q, rng, edges);     // K to complement

  switch (spec.outside.kind) {
    case OutsidePolicy::Kind::None:
      break;
    case OutsidePolicy::Kind::ErdosRenyi:
      sample_pairs(spec.k, spec.n, spec.k, spec.n, spec.outside.er_q, rng, edges);
      break;
    case OutsidePolicy::Kind::SbmBlocks: {
      const NodeId b = spec.outside.block_size;
      for (NodeId start = spec.k; start < spec.n; start += b) {
        sample_pairs(start, start + b, start, start + b, spec.outside.block_p, rng, edges);
        sample_pairs(start, start + b, start + b, spec.n, spec.outside.block_q, rng, edges);
      }
      break;
    }
  }

  LocalModelGraph out;
  out.permutation.resize(spec.n);
  for (NodeId i = 0; i < spec.n; ++i) out.permutation[i] = i;
  if (spec.shuffle_ids) {
    for (NodeId i = spec.n - 1; i > 0; --i) {
      const NodeId j = static_cast<NodeId>(uniform_index(rng, static_cast<std::uint64_t>(i) + 1));
      std::swap(out.permutation[i], out.permutation[j]);
    }
    for (Edge& e : edges) {
      e.u = out.permutation[e.u];
      e.v = out.permutation[e.v];
    }
  }

  std::vector<NodeId> target_ids(spec.k);
  for (NodeId i = 0; i < spec.k; ++i) target_ids[i] = out.permutation[i];
  out.target = NodeSet(std::move(target_ids));
  out.graph = Graph::build(spec.n, edges);
  return out;
}

SbmGraph generate_sbm(NodeId k, NodeId c, double p, double q, std::mt19937_64& rng) {
  if (k <= 0 || c < 2) throw std::invalid_argument("sbm: need k > 0 and c >= 2");
  if (p < 0.0 || p > 1.0 || q < 0.0 || q > 1.0)
    throw std::invalid_argument("sbm: probabilities must lie in [0, 1]");
  const NodeId n = k * c;

  std::vector<Edge> edges;
  const double expected = c * (p * k * (k - 1) / 2.0) +
                          (static_cast<double>(c) * (c - 1) / 2.0) * q * k * k;
  edges.reserve(static_cast<std::size_t>(expected * 1.1) + 64);

  for (NodeId block = 0; block < c; ++block) {
    const NodeId start = block * k;
    sample_pairs(start, start + k, start, start + k, p, rng, edges);
    sample_pairs(start, start + k, start + k, n, q, rng, edges);
  }

  SbmGraph out;
  out.graph = Graph::build(n, edges);
  out.clusters.reserve(c);
  for (NodeId block = 0; block < c; ++block)
    out.clusters.push_back(NodeSet::range(block * k, (block + 1) * k));
  return out;
}

double structural_signal(NodeId n, NodeId k, double p, double q) {
  if (n <= 0 || k <= 0 || k >= n) throw std::invalid_argument("structural_signal: need 0 < k < n");
  if (q <= 0.0)
    throw std::invalid_argument("structural_signal: q must be > 0, the signal is infinite");
  return p * static_cast<double>(k - 1) / (q * static_cast<double>(n - k));
}

}  // namespace lgc
