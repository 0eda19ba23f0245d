#include "lgc/classifier.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "lgc/rng.hpp"

namespace lgc {

namespace {

void check_features(const FeatureMatrix& f) {
  if (f.dims <= 0) throw std::invalid_argument("feature matrix has no columns");
  if (f.data.size() % f.dims != 0)
    throw std::invalid_argument("feature data size not a multiple of dims");
  for (double v : f.data)
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite feature entry");
}

// log(1 + exp(z)) without overflow
double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace

double LinearModel::decision(const double* features) const {
  double z = bias;
  for (size_t d = 0; d < weights.size(); ++d)
    z += weights[d] * ((features[d] - mean[d]) / scale[d]);
  return z;
}

std::string LinearModel::to_json() const {
  nlohmann::json j;
  j["weights"] = weights;
  j["bias"] = bias;
  j["mean"] = mean;
  j["scale"] = scale;
  j["lambda"] = lambda;
  j["iterations"] = iterations;
  return j.dump();
}

LinearModel LinearModel::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  LinearModel m;
  m.weights = j.at("weights").get<std::vector<double>>();
  m.bias = j.at("bias").get<double>();
  m.mean = j.at("mean").get<std::vector<double>>();
  m.scale = j.at("scale").get<std::vector<double>>();
  m.lambda = j.at("lambda").get<double>();
  m.iterations = j.at("iterations").get<int>();
  if (m.mean.size() != m.weights.size() || m.scale.size() != m.weights.size())
    throw std::invalid_argument("inconsistent model dimensions");
  return m;
}

LinearModel train_logistic(const FeatureMatrix& features, const NodeSet& pos,
                           const NodeSet& neg, const TrainOptions& opts) {
  check_features(features);
  if (pos.empty() || neg.empty()) throw std::invalid_argument("both classes must be nonempty");
  for (NodeId i : pos.ids())
    if (neg.contains(i)) throw std::invalid_argument("pos and neg overlap");
  NodeId n = features.rows();
  auto check_row = [&](NodeId i) {
    if (i < 0 || i >= n) throw std::out_of_range("training node outside feature matrix");
  };
  int d = features.dims;

  std::vector<NodeId> rows;
  std::vector<double> y;
  for (NodeId i : pos.ids()) {
    check_row(i);
    rows.push_back(i);
    y.push_back(1.0);
  }
  for (NodeId i : neg.ids()) {
    check_row(i);
    rows.push_back(i);
    y.push_back(0.0);
  }
  size_t m = rows.size();

  LinearModel model;
  model.lambda = opts.lambda;
  model.mean.assign(d, 0.0);
  model.scale.assign(d, 1.0);
  for (NodeId i : rows) {
    const double* f = features.row(i);
    for (int c = 0; c < d; ++c) model.mean[c] += f[c];
  }
  for (int c = 0; c < d; ++c) model.mean[c] /= m;
  std::vector<double> var(d, 0.0);
  for (NodeId i : rows) {
    const double* f = features.row(i);
    for (int c = 0; c < d; ++c) {
      double dv = f[c] - model.mean[c];
      var[c] += dv * dv;
    }
  }
  for (int c = 0; c < d; ++c) {
    double s = std::sqrt(var[c] / m);
    model.scale[c] = s > 1e-12 ? s : 1.0;
  }

  // standardized training matrix
  std::vector<double> x(m * d);
  for (size_t r = 0; r < m; ++r) {
    const double* f = features.row(rows[r]);
    for (int c = 0; c < d; ++c) x[r * d + c] = (f[c] - model.mean[c]) / model.scale[c];
  }

  std::vector<double> w(d, 0.0);
  double b = 0.0;

  auto loss_of = [&](const std::vector<double>& wv, double bv) {
    double loss = 0.0;
    for (size_t r = 0; r < m; ++r) {
      double z = bv;
      for (int c = 0; c < d; ++c) z += wv[c] * x[r * d + c];
      loss += softplus(z) - y[r] * z;
    }
    loss /= m;
    double reg = 0.0;
    for (double v : wv) reg += v * v;
    return loss + 0.5 * opts.lambda * reg;
  };

  double loss = loss_of(w, b);
  double step = opts.step;
  std::vector<double> gw(d), wn(d);
  for (int it = 0; it < opts.iters; ++it) {
    std::fill(gw.begin(), gw.end(), 0.0);
    double gb = 0.0;
    for (size_t r = 0; r < m; ++r) {
      double z = b;
      for (int c = 0; c < d; ++c) z += w[c] * x[r * d + c];
      double err = sigmoid(z) - y[r];
      for (int c = 0; c < d; ++c) gw[c] += err * x[r * d + c];
      gb += err;
    }
    for (int c = 0; c < d; ++c) gw[c] = gw[c] / m + opts.lambda * w[c];
    gb /= m;

    while (true) {
      for (int c = 0; c < d; ++c) wn[c] = w[c] - step * gw[c];
      double bn = b - step * gb;
      double next = loss_of(wn, bn);
      if (next <= loss || step < 1e-12) {
        w = wn;
        b = bn;
        loss = next;
        break;
      }
      step /= 2.0;
    }
  }

  model.weights = std::move(w);
  model.bias = b;
  model.iterations = opts.iters;
  return model;
}

uint8_t predict_one(const LinearModel& model, const FeatureMatrix& features, NodeId node) {
  if (static_cast<int>(model.weights.size()) != features.dims)
    throw std::invalid_argument("model/feature dimension mismatch");
  if (node < 0 || node >= features.rows()) throw std::out_of_range("node outside feature matrix");
  return model.decision(features.row(node)) >= 0.0 ? 1 : 0;
}

LabelAssignment predict_labels(const LinearModel& model, const FeatureMatrix& features,
                               const NodeSet& nodes) {
  LabelAssignment out(features.rows(), 0);
  for (NodeId i : nodes.ids()) out[i] = predict_one(model, features, i);
  return out;
}

LabelAssignment predict_labels(const LinearModel& model, const FeatureMatrix& features) {
  if (static_cast<int>(model.weights.size()) != features.dims)
    throw std::invalid_argument("model/feature dimension mismatch");
  LabelAssignment out(features.rows(), 0);
  for (NodeId i = 0; i < features.rows(); ++i)
    out[i] = model.decision(features.row(i)) >= 0.0 ? 1 : 0;
  return out;
}

std::function<uint8_t(NodeId)> label_predictor(const LinearModel& model,
                                               const FeatureMatrix& features) {
  if (static_cast<int>(model.weights.size()) != features.dims)
    throw std::invalid_argument("model/feature dimension mismatch");
  return [&model, &features](NodeId i) { return predict_one(model, features, i); };
}

PseudoLabelResult pseudo_label_pipeline(const Graph& g, const FeatureMatrix& features,
                                        NodeId seed, double theta, int m,
                                        std::mt19937_64& rng, const TrainOptions& opts) {
  if (features.rows() != g.node_count())
    throw std::invalid_argument("feature rows must match node count");
  if (theta <= 0.0) throw std::invalid_argument("theta must be positive");
  if (m <= 0) throw std::invalid_argument("m must be positive");
  g.check_node(seed);

  DiffusionProblem prob;
  prob.graph = &g;
  prob.source = {{seed, theta}};
  prob.sink = SinkCapacity::degree();
  DiffusionResult res = solve_flow_diffusion(prob);

  PseudoLabelResult out;
  out.embedding = std::move(res.embedding);
  out.pushes = res.pushes;
  const auto& vals = out.embedding.values;
  if (vals.size() < static_cast<size_t>(m))
    throw InsufficientSupport(vals.size(), static_cast<size_t>(m));

  std::vector<std::pair<double, NodeId>> order;
  order.reserve(vals.size());
  for (const auto& [id, v] : vals) order.emplace_back(-v, id);
  std::sort(order.begin(), order.end());
  std::vector<NodeId> pos_ids;
  for (int i = 0; i < m; ++i) pos_ids.push_back(order[i].second);
  out.pos = NodeSet(std::move(pos_ids));

  // uniform sample without replacement from outside the support
  NodeId n = g.node_count();
  size_t outside = static_cast<size_t>(n) - vals.size();
  if (outside < static_cast<size_t>(m))
    throw std::invalid_argument("too few zero-value nodes to sample negatives");
  std::vector<NodeId> neg_ids;
  auto in_support = [&](NodeId i) {
    auto it = std::lower_bound(
        vals.begin(), vals.end(), i,
        [](const std::pair<NodeId, double>& a, NodeId b) { return a.first < b; });
    return it != vals.end() && it->first == i;
  };
  if (outside <= static_cast<size_t>(4 * m)) {
    std::vector<NodeId> pool;
    for (NodeId i = 0; i < n; ++i)
      if (!in_support(i)) pool.push_back(i);
    for (int i = 0; i < m; ++i) {
      size_t j = i + uniform_index(rng, pool.size() - i);
      std::swap(pool[i], pool[j]);
      neg_ids.push_back(pool[i]);
    }
  } else {
    std::vector<uint8_t> taken(n, 0);
    while (neg_ids.size() < static_cast<size_t>(m)) {
      NodeId c = static_cast<NodeId>(uniform_index(rng, n));
      if (taken[c] || in_support(c)) continue;
      taken[c] = 1;
      neg_ids.push_back(c);
    }
  }
  out.neg = NodeSet(std::move(neg_ids));

  out.model = train_logistic(features, out.pos, out.neg, opts);
  return out;
}

}  // namespace lgc
