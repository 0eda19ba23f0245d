#pragma once

#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgc/flow_diffusion.hpp"
#include "lgc/graph.hpp"
#include "lgc/labels.hpp"

namespace lgc {

// Dense row-major node attribute matrix.
struct FeatureMatrix {
  int dims = 0;
  std::vector<double> data;

  NodeId rows() const {
    return dims == 0 ? 0 : static_cast<NodeId>(data.size() / dims);
  }
  const double* row(NodeId i) const { return data.data() + static_cast<size_t>(i) * dims; }
  double* row(NodeId i) { return data.data() + static_cast<size_t>(i) * dims; }
};

// Logistic model over standardized features. `mean` and `scale` are the
// per-dimension statistics of the training rows, stored so prediction can
// apply the same transform.
struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;
  std::vector<double> mean;
  std::vector<double> scale;
  double lambda = 0.0;
  int iterations = 0;

  double decision(const double* features) const;
  std::string to_json() const;
  static LinearModel from_json(const std::string& text);
};

struct TrainOptions {
  double lambda = 1e-2;
  int iters = 500;
  double step = 0.1;
};

// Full-batch gradient descent on the l2-regularized logistic loss. The bias
// is not regularized. The step is halved whenever it would increase the
// loss, so the recorded loss sequence is non-increasing. Zero initialization,
// fully deterministic.
LinearModel train_logistic(const FeatureMatrix& features, const NodeSet& pos,
                           const NodeSet& neg, const TrainOptions& opts = {});

// Label 1 iff w.f + b >= 0.
uint8_t predict_one(const LinearModel& model, const FeatureMatrix& features, NodeId node);

// Full-length assignment; nodes outside `nodes` are left 0.
LabelAssignment predict_labels(const LinearModel& model, const FeatureMatrix& features,
                               const NodeSet& nodes);
LabelAssignment predict_labels(const LinearModel& model, const FeatureMatrix& features);

// Lazy per-node predictor, for reweighted views that only ever ask about
// nodes near the diffusion support.
std::function<uint8_t(NodeId)> label_predictor(const LinearModel& model,
                                               const FeatureMatrix& features);

struct InsufficientSupport : std::runtime_error {
  size_t support = 0;
  size_t needed = 0;
  InsufficientSupport(size_t s, size_t m)
      : std::runtime_error("diffusion support too small for pseudo-labeling: got " +
                           std::to_string(s) + ", need " + std::to_string(m) +
                           "; increase the source mass"),
        support(s),
        needed(m) {}
};

struct PseudoLabelResult {
  LinearModel model;
  NodeSet pos;  // top-m diffusion nodes by value, ties to smaller id
  NodeSet neg;  // m uniform draws from outside the diffusion support
  Embedding embedding;
  long long pushes = 0;
};

// Single-seed bootstrap: diffuse mass theta from `seed` (degree sinks), take
// the m highest-value nodes as positives, m uniform zero-value nodes as
// negatives, and fit the classifier on those feature rows only.
PseudoLabelResult pseudo_label_pipeline(const Graph& g, const FeatureMatrix& features,
                                        NodeId seed, double theta, int m,
                                        std::mt19937_64& rng,
                                        const TrainOptions& opts = {});

}  // namespace lgc
