#pragma once

#include <limits>
#include <string>
#include <vector>

#include "lgc/dataset.hpp"
#include "lgc/theory.hpp"

namespace lgc {

enum class Mode { synthetic, supervised, unsupervised, theory, conjectures };
enum class Method { FD, LFD, PR, LPR, LABELS, CLF };

std::string mode_name(Mode mode);
Mode parse_mode(const std::string& name);
std::string method_name(Method method);
Method parse_method(const std::string& name);

// Parameters of the generated attributed graph used by the bundled example
// config: an equal-block planted-partition graph whose nodes carry Gaussian
// features centered at a per-block mean.
struct BuiltinDatasetSpec {
  bool present = false;
  NodeId block_size = 300;
  NodeId blocks = 5;
  double p = 0.1;
  double q = 0.02;
  double feature_gap = 2.0;    // distance of each block mean from the origin
  double feature_noise = 1.0;  // per-coordinate standard deviation
  std::uint64_t seed = 7;
};

Dataset make_builtin_dataset(const BuiltinDatasetSpec& spec);

struct ExperimentConfig {
  Mode mode = Mode::synthetic;

  // synthetic / conjectures / theory model
  NodeId n = 10000;
  NodeId k = 500;
  double p = 0.05;
  double q = 0.025;
  double a0 = 0.9;
  double a1 = 0.9;

  std::vector<Method> methods = {Method::FD, Method::LFD};
  double eps = 0.05;
  // Source-mass multiplier. NaN in synthetic/conjectures mode means the
  // alpha grid {2, 2.25, ..., 4} with best-F1-on-support selection.
  double alpha = std::numeric_limits<double>::quiet_NaN();
  int trials = 100;
  std::uint64_t master_seed = 1;
  int threads = 1;

  // supervised / unsupervised
  int g_samples = 25;               // ground-truth samples per class
  int m_pseudo = 100;               // pseudo-label count per class
  double mass_multiplier = 2.0;     // multi-seed mass, in units of vol(K)
  double initial_mass_multiplier = 5.0;  // bootstrap single-seed mass
  bool mass_per_seed = true;        // false: split the total across seeds by degree
  std::string edges_path, features_path, labels_path;
  BuiltinDatasetSpec builtin;
  int target_cluster = -1;  // -1: every cluster in the dataset

  bool sweep_both = false;
  bool global_predict = false;

  // theory mode
  int mc_trials = 50;
  int sampled_pairs = 200;
  double delta1 = 0.5, delta2 = 0.5, delta3 = 0.5;
  double eps1 = 1.0, eps2 = 1.0, eps3 = 1.0;

  std::string out_path;
  bool echo_config = false;

  static ExperimentConfig from_json_text(const std::string& text);
  static ExperimentConfig from_json_file(const std::string& path);
  std::string to_json() const;
  void validate() const;
  bool fixed_alpha() const { return !std::isnan(alpha); }
};

struct TrialRecord {
  int trial = 0;
  int cluster = 0;
  std::string method;
  double f1 = 0.0;
  double f1_paper_variant = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double conductance = std::numeric_limits<double>::quiet_NaN();
  long long touched_nodes = 0;
  long long pushes = 0;
  double runtime_ms = 0.0;
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double theta = std::numeric_limits<double>::quiet_NaN();
  double eps = std::numeric_limits<double>::quiet_NaN();
  bool oracle = false;  // hyperparameter picked with ground-truth knowledge
  std::string error;
  std::string params;
};

// Runs synthetic, supervised, unsupervised, or conjectures mode. Records come
// back sorted by (trial, cluster, method) and are a pure function of the
// config; a failing trial produces a record with the error field set.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& config);
std::vector<TrialRecord> run_experiment(const ExperimentConfig& config,
                                        const Dataset* dataset);

struct SummaryRow {
  std::string method;
  std::string params;
  std::string metric;
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
  int count = 0;
};

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records);

std::string records_to_csv(const std::vector<TrialRecord>& records,
                           bool include_runtime = true);
std::string summary_to_csv(const std::vector<SummaryRow>& rows);

struct TheoryReport {
  ModelParams params;
  SimplifiedBounds simplified;
  FormalBounds formal;
  ConjectureMargins margins;
  double labels_f1_value = 0.0;
  bool has_monte_carlo = false;
  LemmaReport lemmas;

  std::string to_json() const;
};

TheoryReport run_theory(const ExperimentConfig& config);

// The (q, a0, a1) rows of the built-in conjecture demonstration; p = 0.05.
struct ConjectureRow {
  double q, a0, a1;
};
const std::vector<ConjectureRow>& conjecture_rows();

}  // namespace lgc
