#pragma once

#include <random>

#include "lgc/random_model.hpp"

namespace lgc {

// Model and analysis parameters for the recovery guarantees.
struct ModelParams {
  NodeId n = 0;
  NodeId k = 0;
  double p = 0.0;
  double q = 0.0;
  double a0 = 1.0;
  double a1 = 1.0;
  double delta1 = 0.5;
  double delta2 = 0.5;
  double delta3 = 0.5;
  double eps1 = 1.0;
  double eps2 = 1.0;
  double eps3 = 1.0;

  double structural_signal() const { return lgc::structural_signal(n, k, p, q); }
  bool assumption_holds() const { return a0 >= 0.5 && a1 >= 0.5; }
  // Density conditions of the formal recovery theorem.
  bool hypotheses_hold() const;
};

struct SimplifiedBounds {
  double f1_lower = 0.0;
  double a0_threshold = 0.0;
};

// Raw formula values, not clamped to [0, 1].
SimplifiedBounds bounds_simplified(const ModelParams& params);

struct FormalBounds {
  double r = 0.0;
  double r_prime = 0.0;
  double theta_dagger = 0.0;  // prescribed source mass
  double fp_lower = 0.0;      // false positives forced by leakage
  double fp_upper = 0.0;
  double f1_lower = 0.0;
  double a0_threshold = 0.0;
  bool hypotheses_ok = false;  // warning flag, values are returned regardless
};

FormalBounds bounds_formal(const ModelParams& params);

// Clamp helper for plotting; the bound ops themselves return raw values.
double clamp_unit(double value);

// Closed-form F1 of the raw noisy labels used as a cluster guess.
double labels_f1(NodeId n, NodeId k, double a0, double a1);

struct ConjectureMargins {
  bool c1_holds = false;  // favors keeping cross-label edges (eps > 0)
  bool c2_holds = false;  // favors cutting them (eps = 0)
  double c1_lhs = 0.0, c1_rhs = 0.0;
  double c2_lhs = 0.0, c2_rhs = 0.0;
};

ConjectureMargins conjecture_margins(NodeId n, NodeId k, double p, double q, double a0,
                                     double a1);

// Monte-Carlo check of the three concentration lemmas and the cut/volume
// ratios on graphs drawn from the planted-cluster model.
struct LemmaReport {
  ModelParams params;
  int trials = 0;
  int sampled_pairs = 0;

  double l1_bound = 0.0;  // min external degree over K must reach this
  double l2_bound = 0.0;  // max same-label degree over K's 1-labeled nodes must stay below
  double l3_bound = 0.0;  // min 2-hop connectivity over sampled pairs must reach this
  int l1_failures = 0;
  int l2_failures = 0;
  int l3_failures = 0;
  double l1_prob_bound = 0.0;  // failure probability the lemmas guarantee
  double l2_prob_bound = 0.0;
  double l3_prob_bound = 0.0;

  double mean_cut_ratio = 0.0;
  double mean_vol_ratio = 0.0;
  double expected_cut_ratio = 0.0;  // a1(1-a0) + a0(1-a1)
  double expected_vol_ratio = 0.0;  // a1^2 + (1-a1)^2

  bool hypotheses_ok = false;
  bool assumption_ok = false;
};

LemmaReport monte_carlo_verify(const ModelParams& params, const OutsidePolicy& outside,
                               int trials, std::mt19937_64& rng, int sampled_pairs = 200);

}  // namespace lgc
