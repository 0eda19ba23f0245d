#include "lgc/theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lgc/labels.hpp"
#include "lgc/rng.hpp"

namespace lgc {

namespace {

void check_base(const ModelParams& mp) {
  if (mp.k < 2 || mp.n <= mp.k) throw std::invalid_argument("need 2 <= k < n");
  if (mp.p < 0 || mp.p > 1 || mp.q < 0 || mp.q > 1)
    throw std::invalid_argument("p, q must lie in [0, 1]");
  if (mp.a0 < 0 || mp.a0 > 1 || mp.a1 < 0 || mp.a1 > 1)
    throw std::invalid_argument("a0, a1 must lie in [0, 1]");
}

}  // namespace

bool ModelParams::hypotheses_hold() const {
  if (k < 3) return false;
  double logk = std::log(static_cast<double>(k));
  double p_min1 = (6.0 + eps1) / (delta1 * delta1) * logk / (k - 2);
  double p_min2 = (std::sqrt(8.0) + eps2) / (delta2 * std::sqrt(1.0 - delta1)) *
                  std::sqrt(logk) / std::sqrt(static_cast<double>(k - 2));
  double q_min = (3.0 + eps3) / (delta3 * delta3) * logk / (n - k);
  return p >= std::max(p_min1, p_min2) && q >= q_min;
}

SimplifiedBounds bounds_simplified(const ModelParams& mp) {
  check_base(mp);
  double gamma = mp.structural_signal();
  if (gamma <= 0.0) throw std::invalid_argument("signal ratio must be positive");
  if (mp.a1 <= 0.0) throw std::invalid_argument("a1 must be positive");
  SimplifiedBounds out;
  out.f1_lower = 1.0 / (1.0 + (1.0 - mp.a1) / 2.0 + (1.0 - mp.a0) / (2.0 * gamma) +
                        (1.0 - mp.a0) * (1.0 - mp.a0) / (2.0 * mp.a1 * gamma * gamma));
  out.a0_threshold =
      1.0 - (std::sqrt((mp.p / gamma + 2.0 * mp.a1 - 1.0) * mp.a1) - mp.a1) * gamma;
  return out;
}

FormalBounds bounds_formal(const ModelParams& mp) {
  check_base(mp);
  if (mp.delta1 <= 0 || mp.delta1 >= 1 || mp.delta2 <= 0 || mp.delta2 >= 1 ||
      mp.delta3 <= 0 || mp.delta3 >= 1)
    throw std::invalid_argument("delta1..3 must lie in (0, 1)");
  double gamma = mp.structural_signal();
  if (gamma <= 0.0) throw std::invalid_argument("signal ratio must be positive");
  if (mp.a1 <= 0.0) throw std::invalid_argument("a1 must be positive");

  double pk1 = mp.p * (mp.k - 1);
  double kappa = static_cast<double>(mp.k - 2) / (mp.k - 1);
  FormalBounds out;
  out.r = (1.0 + mp.delta1) * (1.0 + mp.delta1 + 2.0 / pk1) /
          ((1.0 - mp.delta1) * (1.0 - mp.delta2));
  out.r_prime = out.r / (1.0 - mp.delta3);

  double denom = mp.a1 * gamma * kappa;
  if (denom <= 0.0) throw std::invalid_argument("a1 * gamma * kappa must be positive");
  double s = (denom + (1.0 - mp.a0)) / denom;
  double s2r = s * s * out.r;
  out.theta_dagger = s2r * mp.a1 * mp.k;
  out.fp_upper = (s2r - 1.0) * mp.a1 * mp.k;
  out.fp_lower = (1.0 - mp.delta3) * pk1 / gamma;
  out.f1_lower = 1.0 / (1.0 + (mp.a1 / 2.0) * (s2r - 1.0) + (1.0 - mp.a1) / 2.0);
  out.a0_threshold =
      1.0 -
      kappa *
          (std::sqrt((mp.p / gamma / out.r_prime + (2.0 * mp.a1 - 1.0) / out.r) * mp.a1) -
           mp.a1) *
          gamma;
  out.hypotheses_ok = mp.hypotheses_hold();
  return out;
}

double clamp_unit(double value) {
  if (std::isnan(value)) return value;
  return std::min(1.0, std::max(0.0, value));
}

double labels_f1(NodeId n, NodeId k, double a0, double a1) {
  double tp = a1 * k;
  double fp = (1.0 - a0) * (n - k);
  // fn = (1 - a1) k, so tp + fn = k
  double denom = tp + fp + k;
  if (denom <= 0.0) return 0.0;
  return 2.0 * tp / denom;
}

ConjectureMargins conjecture_margins(NodeId n, NodeId k, double p, double q, double a0,
                                     double a1) {
  ConjectureMargins out;
  out.c1_lhs = (1.0 - a1) * p * k;
  out.c1_rhs = a0 * q * (n - k);
  out.c1_holds = out.c1_lhs > out.c1_rhs;
  out.c2_lhs = (1.0 - a1) * p * p * k;
  out.c2_rhs = a0 * q * q * (n - k);
  out.c2_holds = out.c2_lhs < out.c2_rhs;
  return out;
}

namespace {

bool has_edge(const Graph& g, NodeId u, NodeId v) {
  auto nbs = g.neighbors(u);
  auto it = std::lower_bound(nbs.begin(), nbs.end(), v,
                             [](const Graph::Neighbor& a, NodeId b) { return a.id < b; });
  return it != nbs.end() && it->id == v;
}

}  // namespace

LemmaReport monte_carlo_verify(const ModelParams& mp, const OutsidePolicy& outside,
                               int trials, std::mt19937_64& rng, int sampled_pairs) {
  check_base(mp);
  if (mp.n > 20000) throw std::invalid_argument("monte carlo limited to n <= 20000");
  if (trials <= 0 || sampled_pairs <= 0)
    throw std::invalid_argument("trials and sampled_pairs must be positive");

  LemmaReport rep;
  rep.params = mp;
  rep.trials = trials;
  rep.sampled_pairs = sampled_pairs;
  rep.hypotheses_ok = mp.hypotheses_hold();
  rep.assumption_ok = mp.assumption_holds();

  double n = mp.n, k = mp.k, p = mp.p, q = mp.q, a0 = mp.a0, a1 = mp.a1;
  rep.l1_bound = (1.0 - mp.delta3) * q * (n - k);
  rep.l2_bound = (1.0 + mp.delta1) * (p * (a1 * k - 1.0) + (1.0 - a0) * q * (n - k));
  rep.l3_bound = (1.0 - mp.delta1) * (1.0 - mp.delta2) * p * p * (a1 * k - 1.0);
  rep.l1_prob_bound = std::pow(k, -mp.eps3 / 3.0);
  rep.l2_prob_bound = std::pow(k, -mp.eps1 / 6.0);
  rep.l3_prob_bound = 2.0 * std::pow(k, -mp.eps1 / 6.0) + std::pow(k, -mp.eps2);
  rep.expected_cut_ratio = a1 * (1.0 - a0) + a0 * (1.0 - a1);
  rep.expected_vol_ratio = a1 * a1 + (1.0 - a1) * (1.0 - a1);

  ModelSpec spec;
  spec.n = mp.n;
  spec.k = mp.k;
  spec.p = mp.p;
  spec.q = mp.q;
  spec.outside = outside;
  spec.shuffle_ids = false;

  double cut_ratio_sum = 0.0, vol_ratio_sum = 0.0;
  int ratio_trials = 0;

  for (int t = 0; t < trials; ++t) {
    LocalModelGraph inst = generate_local_model(spec, rng);
    const Graph& g = inst.graph;
    LabelAssignment labels = generate_noisy_labels(inst.target, mp.n, a0, a1, rng);

    std::vector<NodeId> in_k_y1;  // 1-labeled members of the planted cluster
    for (NodeId i = 0; i < mp.k; ++i)
      if (labels[i]) in_k_y1.push_back(i);

    // L1: every cluster node keeps enough edges to the outside.
    int min_ext = -1;
    // L2: degree inside the same-label subgraph stays bounded.
    int max_same = -1;
    long long cut_total = 0, cut_same = 0, vol_internal = 0, vol_same = 0;
    for (NodeId i = 0; i < mp.k; ++i) {
      int ext = 0, same = 0, internal = 0, internal_same = 0;
      for (const auto& nb : g.neighbors(i)) {
        bool agree = labels[nb.id] == labels[i];
        if (nb.id >= mp.k) {
          ++ext;
          cut_total += 1;
          if (agree) cut_same += 1;
        } else {
          ++internal;
          if (agree) ++internal_same;
        }
        if (agree) ++same;
      }
      if (min_ext < 0 || ext < min_ext) min_ext = ext;
      if (labels[i] && same > max_same) max_same = same;
      vol_internal += internal;
      vol_same += internal_same;
    }
    if (min_ext < rep.l1_bound) ++rep.l1_failures;
    if (max_same > rep.l2_bound) ++rep.l2_failures;

    if (cut_total > 0 && vol_internal > 0) {
      cut_ratio_sum += static_cast<double>(cut_same) / cut_total;
      vol_ratio_sum += static_cast<double>(vol_same) / vol_internal;
      ++ratio_trials;
    }

    // L3: sampled pairs of 1-labeled cluster nodes stay 2-hop connected
    // through other 1-labeled cluster nodes.
    if (in_k_y1.size() >= 2) {
      bool pair_failed = false;
      for (int s = 0; s < sampled_pairs && !pair_failed; ++s) {
        NodeId u = in_k_y1[uniform_index(rng, in_k_y1.size())];
        NodeId v = u;
        while (v == u) v = in_k_y1[uniform_index(rng, in_k_y1.size())];
        double paths = has_edge(g, u, v) ? 1.0 : 0.0;
        for (const auto& nb : g.neighbors(u)) {
          if (nb.id == v || nb.id >= mp.k || !labels[nb.id]) continue;
          if (has_edge(g, nb.id, v)) paths += 1.0;
        }
        if (paths < rep.l3_bound) pair_failed = true;
      }
      if (pair_failed) ++rep.l3_failures;
    } else {
      ++rep.l3_failures;
    }
  }

  if (ratio_trials > 0) {
    rep.mean_cut_ratio = cut_ratio_sum / ratio_trials;
    rep.mean_vol_ratio = vol_ratio_sum / ratio_trials;
  }
  return rep;
}

}  // namespace lgc
