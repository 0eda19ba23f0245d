#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lgc/experiments.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_path;
  std::string methods_csv;
  int trials = 0;
  std::uint64_t seed = 0;
  int threads = 0;
  double eps = 0.0;
  double alpha = 0.0;
  long long n = 0, k = 0;
  double p = 0.0, q = 0.0, a0 = 0.0, a1 = 0.0;
  bool sweep_both = false;
  bool global_predict = false;
  bool echo_config = false;

  CLI::Option* trials_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* threads_opt = nullptr;
  CLI::Option* eps_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* p_opt = nullptr;
  CLI::Option* q_opt = nullptr;
  CLI::Option* a0_opt = nullptr;
  CLI::Option* a1_opt = nullptr;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "JSON config file");
  cmd->add_option("--out", o.out_path, "CSV output path (stdout when omitted)");
  cmd->add_option("--methods", o.methods_csv, "comma-separated method list");
  o.trials_opt = cmd->add_option("--trials", o.trials, "trial count");
  o.seed_opt = cmd->add_option("--seed", o.seed, "master seed");
  o.threads_opt = cmd->add_option("--threads", o.threads, "worker thread count");
  o.eps_opt = cmd->add_option("--eps", o.eps, "cross-label edge downweighting factor");
  o.alpha_opt = cmd->add_option("--alpha", o.alpha, "source-mass multiplier");
  o.n_opt = cmd->add_option("--n", o.n, "node count");
  o.k_opt = cmd->add_option("--k", o.k, "target cluster size");
  o.p_opt = cmd->add_option("--p", o.p, "within-cluster edge probability");
  o.q_opt = cmd->add_option("--q", o.q, "cross-cluster edge probability");
  o.a0_opt = cmd->add_option("--a0", o.a0, "label accuracy outside the cluster");
  o.a1_opt = cmd->add_option("--a1", o.a1, "label accuracy inside the cluster");
  cmd->add_flag("--sweep-both", o.sweep_both,
                "emit both plain and degree-normalized sweep cuts");
  cmd->add_flag("--global-predict", o.global_predict,
                "predict labels for every node up front");
  cmd->add_flag("--echo-config", o.echo_config, "emit the resolved config as JSON");
}

lgc::ExperimentConfig resolve(const CommonOpts& o, lgc::Mode default_mode,
                              bool force_mode) {
  lgc::ExperimentConfig cfg;
  if (!o.config_path.empty())
    cfg = lgc::ExperimentConfig::from_json_file(o.config_path);
  else
    cfg.mode = default_mode;
  if (force_mode) cfg.mode = default_mode;
  if (!o.methods_csv.empty()) {
    cfg.methods.clear();
    std::string token;
    for (char ch : o.methods_csv + ",") {
      if (ch == ',') {
        if (!token.empty()) cfg.methods.push_back(lgc::parse_method(token));
        token.clear();
      } else {
        token.push_back(ch);
      }
    }
  }
  if (o.trials_opt->count()) cfg.trials = o.trials;
  if (o.seed_opt->count()) cfg.master_seed = o.seed;
  if (o.threads_opt->count()) cfg.threads = o.threads;
  if (o.eps_opt->count()) cfg.eps = o.eps;
  if (o.alpha_opt->count()) cfg.alpha = o.alpha;
  if (o.n_opt->count()) cfg.n = static_cast<lgc::NodeId>(o.n);
  if (o.k_opt->count()) cfg.k = static_cast<lgc::NodeId>(o.k);
  if (o.p_opt->count()) cfg.p = o.p;
  if (o.q_opt->count()) cfg.q = o.q;
  if (o.a0_opt->count()) cfg.a0 = o.a0;
  if (o.a1_opt->count()) cfg.a1 = o.a1;
  if (o.sweep_both) cfg.sweep_both = true;
  if (o.global_predict) cfg.global_predict = true;
  if (o.echo_config) cfg.echo_config = true;
  if (!o.out_path.empty()) cfg.out_path = o.out_path;
  return cfg;
}

std::string summary_path(const std::string& out) {
  std::string stem = out;
  if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".csv")
    stem.resize(stem.size() - 4);
  return stem + ".summary.csv";
}

std::string config_path_for(const std::string& out) {
  std::string stem = out;
  if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".csv")
    stem.resize(stem.size() - 4);
  return stem + ".config.json";
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body;
}

void emit_results(const lgc::ExperimentConfig& cfg,
                  const std::vector<lgc::TrialRecord>& records) {
  std::string csv = lgc::records_to_csv(records);
  std::string summary = lgc::summary_to_csv(lgc::summarize(records));
  if (cfg.echo_config) {
    if (!cfg.out_path.empty())
      write_file(config_path_for(cfg.out_path), cfg.to_json() + "\n");
    else
      std::cerr << cfg.to_json() << "\n";
  }
  if (cfg.out_path.empty()) {
    std::cout << csv << "# summary\n" << summary;
  } else {
    write_file(cfg.out_path, csv);
    write_file(summary_path(cfg.out_path), summary);
    std::cerr << "wrote " << records.size() << " records to " << cfg.out_path << "\n";
  }
}

int run_records_mode(const lgc::ExperimentConfig& cfg) {
  auto records = lgc::run_experiment(cfg);
  emit_results(cfg, records);
  return 0;
}

int run_theory_mode(const lgc::ExperimentConfig& cfg) {
  lgc::TheoryReport report = lgc::run_theory(cfg);
  std::string body = report.to_json() + "\n";
  if (cfg.echo_config) {
    if (!cfg.out_path.empty())
      write_file(config_path_for(cfg.out_path), cfg.to_json() + "\n");
    else
      std::cerr << cfg.to_json() << "\n";
  }
  if (cfg.out_path.empty())
    std::cout << body;
  else
    write_file(cfg.out_path, body);
  return 0;
}

int run_sweep_hyper(lgc::ExperimentConfig cfg, bool trials_given) {
  // Robustness grid over the source-mass multiplier and the downweighting
  // factor, diffusing with fixed hyperparameters and rounding with a sweep.
  static const double alphas[] = {2.0, 3.0, 4.0, 5.0};
  static const double epss[] = {0.01, 0.025, 0.05, 0.075, 0.1, 0.2};
  cfg.mode = lgc::Mode::synthetic;
  cfg.methods = {lgc::Method::LFD};
  if (!trials_given) cfg.trials = 30;
  std::vector<lgc::TrialRecord> all;
  for (double a : alphas) {
    for (double e : epss) {
      lgc::ExperimentConfig cell = cfg;
      cell.alpha = a;
      cell.eps = e;
      auto records = lgc::run_experiment(cell);
      char tag[32];
      std::snprintf(tag, sizeof(tag), ";alpha=%g", a);
      for (auto& r : records) {
        r.params += tag;
        all.push_back(std::move(r));
      }
    }
  }
  emit_results(cfg, all);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local graph clustering with noisy node labels"};
  app.require_subcommand(1);

  CommonOpts synth_opts, run_opts, theory_opts, conj_opts, sweep_opts;
  CLI::App* synth = app.add_subcommand("synthetic",
                                       "planted-cluster trials with generated labels");
  add_common(synth, synth_opts);
  CLI::App* runc = app.add_subcommand("run", "run the mode given in the config file");
  add_common(runc, run_opts);
  CLI::App* theory = app.add_subcommand("theory", "recovery bound report as JSON");
  add_common(theory, theory_opts);
  CLI::App* conj = app.add_subcommand("conjectures",
                                      "built-in low/high-signal comparison grid");
  add_common(conj, conj_opts);
  CLI::App* sweep = app.add_subcommand("sweep-hyper",
                                       "alpha x eps robustness grid for LFD");
  add_common(sweep, sweep_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (synth->parsed())
      return run_records_mode(resolve(synth_opts, lgc::Mode::synthetic, true));
    if (runc->parsed()) {
      if (run_opts.config_path.empty())
        throw std::invalid_argument("run needs --config");
      lgc::ExperimentConfig cfg = resolve(run_opts, lgc::Mode::synthetic, false);
      if (cfg.mode == lgc::Mode::theory) return run_theory_mode(cfg);
      return run_records_mode(cfg);
    }
    if (theory->parsed())
      return run_theory_mode(resolve(theory_opts, lgc::Mode::theory, true));
    if (conj->parsed())
      return run_records_mode(resolve(conj_opts, lgc::Mode::conjectures, true));
    if (sweep->parsed())
      return run_sweep_hyper(resolve(sweep_opts, lgc::Mode::synthetic, true),
                             sweep_opts.trials_opt->count() > 0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
