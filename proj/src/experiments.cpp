#include "lgc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lgc/appr.hpp"
#include "lgc/eval.hpp"
#include "lgc/flow_diffusion.hpp"
#include "lgc/labels.hpp"
#include "lgc/random_model.hpp"
#include "lgc/rng.hpp"
#include "lgc/sweep_cut.hpp"

namespace lgc {

namespace {

std::string fmt(double v) {
  if (std::isnan(v)) return "";
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt_param(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

const std::vector<double>& fd_alpha_grid() {
  static const std::vector<double> grid = {2.0,  2.25, 2.5,  2.75, 3.0,
                                           3.25, 3.5,  3.75, 4.0};
  return grid;
}

const std::vector<double>& teleport_grid() {
  static const std::vector<double> grid = {0.05, 0.1, 0.2};
  return grid;
}

double safe_conductance(const Graph& g, const NodeSet& s) {
  if (s.empty() || static_cast<NodeId>(s.size()) >= g.node_count())
    return std::numeric_limits<double>::quiet_NaN();
  return set_stats(g, s).conductance;
}

void fill_eval(TrialRecord& rec, const ClusterEval& ev) {
  rec.f1 = ev.f1;
  rec.f1_paper_variant = ev.f1_paper_variant;
  rec.precision = ev.precision;
  rec.recall = ev.recall;
}

DiffusionResult solve_dispatch(const Graph& g, DiffusionProblem prob) {
  prob.graph = &g;
  return solve_flow_diffusion(prob);
}

DiffusionResult solve_dispatch(const LabelWeightedView& v, const DiffusionProblem& prob) {
  return solve_flow_diffusion(v, prob);
}

// With unit sink capacities every touched node is either in supp(x) or
// adjacent to it, so the touched count is capped by the source mass plus the
// degree sum over the support.
template <class GraphT>
void check_locality(const GraphT& dg, const Embedding& emb, double theta) {
  double cap = theta;
  for (const auto& [i, x] : emb.values) cap += static_cast<double>(dg.neighbors(i).size());
  if (static_cast<double>(emb.touched.size()) > cap)
    throw std::logic_error("locality accounting violated: touched_nodes exceeds source mass plus support degree sum");
}

// Single-seed diffusion with the alpha grid, warm starting each level from
// the previous one; keeps the alpha with the best F1 of supp(x) against the
// target, which is the ground-truth-assisted selection rule.
template <class GraphT>
void fd_oracle_grid(TrialRecord& rec, const GraphT& dg, const Graph& g0, NodeId seed_node,
                    double mass_unit, const NodeSet& target, bool eager) {
  Embedding warm;
  bool have_warm = false;
  std::uint64_t cum_pushes = 0;
  double best_f1 = -1.0;
  bool any_feasible = false;
  for (double a : fd_alpha_grid()) {
    DiffusionProblem prob;
    prob.source = {{seed_node, a * mass_unit}};
    prob.sink = SinkCapacity::uniform(1.0);
    prob.eager_feasibility_check = eager;
    prob.warm_start = have_warm ? &warm : nullptr;
    DiffusionResult res;
    try {
      res = solve_dispatch(dg, prob);
    } catch (const InfeasibleDiffusion&) {
      break;  // mass only grows along the grid
    }
    any_feasible = true;
    cum_pushes += res.pushes;
    check_locality(dg, res.embedding, a * mass_unit);
    NodeSet supp = support(res.embedding);
    ClusterEval ev = evaluate_cluster(supp, target);
    if (ev.f1 > best_f1) {
      best_f1 = ev.f1;
      fill_eval(rec, ev);
      rec.conductance = safe_conductance(g0, supp);
      rec.touched_nodes = static_cast<long long>(res.embedding.touched.size());
      rec.pushes = static_cast<long long>(cum_pushes);
      rec.alpha = a;
      rec.theta = a * mass_unit;
      rec.oracle = true;
    }
    warm = std::move(res.embedding);
    have_warm = true;
  }
  if (!any_feasible) rec.error = "diffusion infeasible for every alpha in the grid";
}

// Fixed-mass diffusion rounded with a sweep cut over the original graph.
template <class GraphT>
void fd_fixed(TrialRecord& rec, std::vector<TrialRecord>* extra, const GraphT& dg,
              const Graph& g0, std::vector<std::pair<NodeId, double>> sources,
              const SinkCapacity& sink, bool eager, bool unit_sink, double alpha,
              const NodeSet& target, bool sweep_both) {
  DiffusionProblem prob;
  prob.source = std::move(sources);
  prob.sink = sink;
  prob.eager_feasibility_check = eager;
  DiffusionResult res = solve_dispatch(dg, prob);
  if (unit_sink) check_locality(dg, res.embedding, res.total_source_mass);
  rec.alpha = alpha;
  rec.theta = res.total_source_mass;
  rec.touched_nodes = static_cast<long long>(res.embedding.touched.size());
  rec.pushes = static_cast<long long>(res.pushes);
  if (res.embedding.values.empty()) {
    fill_eval(rec, evaluate_cluster(NodeSet(), target));
    return;
  }
  SweepResult sw = sweep_cut(g0, res.embedding, false);
  fill_eval(rec, evaluate_cluster(sw.cluster, target));
  rec.conductance = sw.conductance;
  if (sweep_both && extra != nullptr) {
    TrialRecord alt = rec;
    SweepResult sw2 = sweep_cut(g0, res.embedding, true);
    fill_eval(alt, evaluate_cluster(sw2.cluster, target));
    alt.conductance = sw2.conductance;
    alt.params += ";sweep=deg";
    extra->push_back(std::move(alt));
  }
}

template <class GraphT>
void pr_fixed(TrialRecord& rec, const GraphT& dg, const Graph& g0, const NodeSet& seeds,
              double total_mass, double alpha, const NodeSet& target) {
  AlphaSearchResult asr = default_appr_config(dg, g0, seeds, total_mass, teleport_grid());
  fill_eval(rec, evaluate_cluster(asr.sweep.cluster, target));
  rec.conductance = asr.sweep.conductance;
  rec.touched_nodes = static_cast<long long>(asr.result.scores.touched.size());
  rec.pushes = static_cast<long long>(asr.result.pushes);
  rec.alpha = alpha;
  rec.theta = total_mass;
  rec.params += ";teleport=" + fmt_param(asr.alpha);
}

template <class GraphT>
void pr_oracle_grid(TrialRecord& rec, const GraphT& dg, const Graph& g0, const NodeSet& seeds,
                    double mass_unit, const NodeSet& target) {
  double best_f1 = -1.0;
  TrialRecord best = rec;
  for (double a : fd_alpha_grid()) {
    TrialRecord cur = rec;
    pr_fixed(cur, dg, g0, seeds, a * mass_unit, a, target);
    if (cur.f1 > best_f1) {
      best_f1 = cur.f1;
      best = cur;
    }
  }
  best.oracle = true;
  rec = best;
}

template <class Fn>
void parallel_trials(int tasks, int threads, Fn&& fn) {
  if (threads <= 1 || tasks <= 1) {
    for (int t = 0; t < tasks; ++t) fn(t);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int t = next.fetch_add(1); t < tasks; t = next.fetch_add(1)) fn(t);
  };
  std::vector<std::thread> pool;
  int count = std::min(threads, tasks);
  pool.reserve(count);
  for (int i = 0; i < count; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

bool has_method(const ExperimentConfig& cfg, Method m) {
  return std::find(cfg.methods.begin(), cfg.methods.end(), m) != cfg.methods.end();
}

std::vector<NodeId> sample_without_replacement(const std::vector<NodeId>& pool, int count,
                                               std::mt19937_64& rng) {
  std::vector<NodeId> work = pool;
  std::vector<NodeId> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    size_t j = i + uniform_index(rng, work.size() - i);
    std::swap(work[i], work[j]);
    out.push_back(work[i]);
  }
  return out;
}

void sort_records(std::vector<TrialRecord>& records) {
  std::sort(records.begin(), records.end(), [](const TrialRecord& a, const TrialRecord& b) {
    if (a.trial != b.trial) return a.trial < b.trial;
    if (a.cluster != b.cluster) return a.cluster < b.cluster;
    if (a.method != b.method) return a.method < b.method;
    return a.params < b.params;
  });
}

std::vector<TrialRecord> flatten(std::vector<std::vector<TrialRecord>>& per_task) {
  std::vector<TrialRecord> out;
  size_t total = 0;
  for (const auto& v : per_task) total += v.size();
  out.reserve(total);
  for (auto& v : per_task)
    for (auto& r : v) out.push_back(std::move(r));
  sort_records(out);
  return out;
}

std::vector<TrialRecord> run_synthetic(const ExperimentConfig& cfg) {
  const NodeId c = cfg.n / cfg.k;
  std::vector<std::vector<TrialRecord>> per_trial(cfg.trials);
  const bool need_weighted = has_method(cfg, Method::LFD) || has_method(cfg, Method::LPR);

  parallel_trials(cfg.trials, cfg.threads, [&](int t) {
    auto& out = per_trial[t];
    try {
      std::mt19937_64 rng = make_stream(cfg.master_seed, static_cast<std::uint64_t>(t));
      SbmGraph sbm = generate_sbm(cfg.k, c, cfg.p, cfg.q, rng);
      const size_t target_idx = uniform_index(rng, c);
      const NodeSet& target = sbm.clusters[target_idx];
      LabelAssignment labels = generate_noisy_labels(target, cfg.n, cfg.a0, cfg.a1, rng);
      NodeId seed_node = target.ids()[uniform_index(rng, target.size())];

      Graph weighted;
      if (need_weighted) weighted = reweight(sbm.graph, labels, cfg.eps);
      const std::string base_params =
          "a0=" + fmt_param(cfg.a0) + ";a1=" + fmt_param(cfg.a1);

      for (Method m : cfg.methods) {
        TrialRecord rec;
        rec.trial = t;
        rec.cluster = static_cast<int>(target_idx);
        rec.method = method_name(m);
        rec.params = base_params;
        std::vector<TrialRecord> extra;
        auto start = std::chrono::steady_clock::now();
        try {
          switch (m) {
            case Method::LABELS: {
              NodeSet guess = label_support(labels, 1);
              fill_eval(rec, evaluate_cluster(guess, target));
              rec.conductance = safe_conductance(sbm.graph, guess);
              break;
            }
            case Method::FD:
              if (cfg.fixed_alpha())
                fd_fixed(rec, &extra, sbm.graph, sbm.graph,
                         {{seed_node, cfg.alpha * cfg.k}}, SinkCapacity::uniform(1.0),
                         false, true, cfg.alpha, target, cfg.sweep_both);
              else
                fd_oracle_grid(rec, sbm.graph, sbm.graph, seed_node, cfg.k, target, false);
              break;
            case Method::LFD: {
              rec.eps = cfg.eps;
              rec.params += ";eps=" + fmt_param(cfg.eps);
              const bool eager = cfg.eps == 0.0;
              if (cfg.fixed_alpha())
                fd_fixed(rec, &extra, weighted, sbm.graph,
                         {{seed_node, cfg.alpha * cfg.k}}, SinkCapacity::uniform(1.0),
                         eager, true, cfg.alpha, target, cfg.sweep_both);
              else
                fd_oracle_grid(rec, weighted, sbm.graph, seed_node, cfg.k, target, eager);
              break;
            }
            case Method::PR:
              if (cfg.fixed_alpha())
                pr_fixed(rec, sbm.graph, sbm.graph, NodeSet({seed_node}),
                         cfg.alpha * cfg.k, cfg.alpha, target);
              else
                pr_oracle_grid(rec, sbm.graph, sbm.graph, NodeSet({seed_node}), cfg.k,
                               target);
              break;
            case Method::LPR:
              rec.eps = cfg.eps;
              rec.params += ";eps=" + fmt_param(cfg.eps);
              if (cfg.fixed_alpha())
                pr_fixed(rec, weighted, sbm.graph, NodeSet({seed_node}),
                         cfg.alpha * cfg.k, cfg.alpha, target);
              else
                pr_oracle_grid(rec, weighted, sbm.graph, NodeSet({seed_node}), cfg.k,
                               target);
              break;
            case Method::CLF:
              throw std::invalid_argument(
                  "CLF needs node features; use supervised or unsupervised mode");
          }
        } catch (const std::exception& e) {
          rec.error = e.what();
        }
        rec.runtime_ms = elapsed_ms(start);
        out.push_back(std::move(rec));
        for (auto& r : extra) out.push_back(std::move(r));
      }
    } catch (const std::exception& e) {
      TrialRecord rec;
      rec.trial = t;
      rec.method = "trial";
      rec.error = e.what();
      out.push_back(std::move(rec));
    }
  });
  return flatten(per_trial);
}

std::vector<TrialRecord> run_conjectures(const ExperimentConfig& cfg) {
  const auto& rows = conjecture_rows();
  const double p = 0.05;
  const NodeId k = 500, c = 20, n = k * c;
  const int tasks = static_cast<int>(rows.size()) * cfg.trials;
  std::vector<std::vector<TrialRecord>> per_task(tasks);

  parallel_trials(tasks, cfg.threads, [&](int task) {
    const int row_idx = task / cfg.trials;
    const int t = task % cfg.trials;
    const ConjectureRow& row = rows[row_idx];
    auto& out = per_task[task];
    try {
      std::mt19937_64 rng = make_stream(cfg.master_seed, static_cast<std::uint64_t>(task));
      SbmGraph sbm = generate_sbm(k, c, p, row.q, rng);
      const size_t target_idx = uniform_index(rng, c);
      const NodeSet& target = sbm.clusters[target_idx];
      LabelAssignment labels = generate_noisy_labels(target, n, row.a0, row.a1, rng);
      // The low/high-signal comparison assumes a correctly labeled seed, so
      // draw it from the label-1 part of the target.
      std::vector<NodeId> seed_pool;
      for (NodeId i : target)
        if (labels[i] == 1) seed_pool.push_back(i);
      if (seed_pool.empty()) seed_pool = target.ids();
      NodeId seed_node = seed_pool[uniform_index(rng, seed_pool.size())];

      const std::string base_params = "p=" + fmt_param(p) + ";q=" + fmt_param(row.q) +
                                      ";a0=" + fmt_param(row.a0) +
                                      ";a1=" + fmt_param(row.a1);
      struct Variant {
        const char* name;
        double eps;  // negative: unweighted graph
      };
      const Variant variants[] = {{"FD", -1.0}, {"LFD(eps=0)", 0.0}, {"LFD(eps=0.2)", 0.2}};
      for (const Variant& v : variants) {
        TrialRecord rec;
        rec.trial = t;
        rec.cluster = row_idx;
        rec.method = v.name;
        rec.params = base_params;
        std::vector<TrialRecord> extra;
        auto start = std::chrono::steady_clock::now();
        try {
          const Graph* dg = &sbm.graph;
          Graph weighted;
          bool eager = false;
          if (v.eps >= 0.0) {
            weighted = reweight(sbm.graph, labels, v.eps);
            dg = &weighted;
            eager = v.eps == 0.0;
            rec.eps = v.eps;
          }
          if (cfg.fixed_alpha())
            fd_fixed(rec, &extra, *dg, sbm.graph, {{seed_node, cfg.alpha * k}},
                     SinkCapacity::uniform(1.0), eager, true, cfg.alpha, target,
                     cfg.sweep_both);
          else
            fd_oracle_grid(rec, *dg, sbm.graph, seed_node, k, target, eager);
        } catch (const std::exception& e) {
          rec.error = e.what();
        }
        rec.runtime_ms = elapsed_ms(start);
        out.push_back(std::move(rec));
        for (auto& r : extra) out.push_back(std::move(r));
      }
    } catch (const std::exception& e) {
      TrialRecord rec;
      rec.trial = t;
      rec.cluster = row_idx;
      rec.method = "trial";
      rec.error = e.what();
      out.push_back(std::move(rec));
    }
  });
  return flatten(per_task);
}

// Source list for a multi-seed diffusion: either the full budget at every
// seed or the budget split across seeds proportionally to degree.
std::vector<std::pair<NodeId, double>> seed_masses(const Graph& g, const NodeSet& seeds,
                                                   double budget, bool per_seed) {
  std::vector<std::pair<NodeId, double>> out;
  out.reserve(seeds.size());
  if (per_seed) {
    for (NodeId s : seeds) out.push_back({s, budget});
    return out;
  }
  double total_deg = 0.0;
  for (NodeId s : seeds) total_deg += g.weighted_degree(s);
  if (total_deg <= 0.0) throw DegenerateSeed("seed set has zero total degree");
  for (NodeId s : seeds) out.push_back({s, budget * g.weighted_degree(s) / total_deg});
  return out;
}

double total_mass(const std::vector<std::pair<NodeId, double>>& sources) {
  double sum = 0.0;
  for (const auto& [id, m] : sources) sum += m;
  return sum;
}

struct ClusterTask {
  int cluster_id;
  const NodeSet* members;
};

std::vector<ClusterTask> cluster_tasks(const ExperimentConfig& cfg, const Dataset& ds) {
  std::vector<ClusterTask> tasks;
  for (const auto& [cid, members] : ds.clusters) {
    if (cfg.target_cluster >= 0 && cid != cfg.target_cluster) continue;
    tasks.push_back({cid, &members});
  }
  if (tasks.empty()) throw std::invalid_argument("no matching cluster in the dataset");
  return tasks;
}

double volume_of(const Graph& g, const NodeSet& s) {
  double v = 0.0;
  for (NodeId i : s) v += g.weighted_degree(i);
  return v;
}

std::vector<TrialRecord> run_supervised(const ExperimentConfig& cfg, const Dataset& ds) {
  if (!ds.has_features) throw std::invalid_argument("supervised mode needs node features");
  auto tasks = cluster_tasks(cfg, ds);
  const Graph& g0 = ds.graph;
  const NodeId n = g0.node_count();
  std::vector<std::vector<TrialRecord>> per_trial(cfg.trials);

  parallel_trials(cfg.trials, cfg.threads, [&](int t) {
    auto& out = per_trial[t];
    std::mt19937_64 rng = make_stream(cfg.master_seed, static_cast<std::uint64_t>(t));
    for (const ClusterTask& task : tasks) {
      const NodeSet& target = *task.members;
      const std::string base_params = "g=" + std::to_string(cfg.g_samples);
      auto emit_errors = [&](const std::string& msg) {
        for (Method m : cfg.methods) {
          TrialRecord rec;
          rec.trial = t;
          rec.cluster = task.cluster_id;
          rec.method = method_name(m);
          rec.params = base_params;
          rec.error = msg;
          out.push_back(std::move(rec));
        }
      };
      if (static_cast<int>(target.size()) < cfg.g_samples ||
          static_cast<int>(n - target.size()) < cfg.g_samples) {
        emit_errors("cluster too small for the requested sample count");
        continue;
      }

      std::vector<NodeId> pos_ids =
          sample_without_replacement(target.ids(), cfg.g_samples, rng);
      std::vector<NodeId> neg_ids;
      {
        std::vector<std::uint8_t> picked(n, 0);
        while (static_cast<int>(neg_ids.size()) < cfg.g_samples) {
          NodeId cand = static_cast<NodeId>(uniform_index(rng, n));
          if (picked[cand] || target.contains(cand)) continue;
          picked[cand] = 1;
          neg_ids.push_back(cand);
        }
      }
      NodeSet pos(std::move(pos_ids)), neg(std::move(neg_ids));

      LinearModel model;
      try {
        model = train_logistic(ds.features, pos, neg);
      } catch (const std::exception& e) {
        emit_errors(e.what());
        continue;
      }

      LabelAssignment global_labels;
      std::function<std::uint8_t(NodeId)> label_fn;
      const bool need_global =
          cfg.global_predict || has_method(cfg, Method::CLF) || has_method(cfg, Method::LABELS);
      if (need_global) {
        global_labels = predict_labels(model, ds.features);
        label_fn = [&global_labels](NodeId i) { return global_labels[i]; };
      } else {
        label_fn = label_predictor(model, ds.features);
      }

      const double vol_k = volume_of(g0, target);
      auto sources = seed_masses(g0, pos, cfg.mass_multiplier * vol_k, cfg.mass_per_seed);

      for (Method m : cfg.methods) {
        TrialRecord rec;
        rec.trial = t;
        rec.cluster = task.cluster_id;
        rec.method = method_name(m);
        rec.params = base_params;
        std::vector<TrialRecord> extra;
        auto start = std::chrono::steady_clock::now();
        try {
          switch (m) {
            case Method::FD:
              fd_fixed(rec, &extra, g0, g0, sources, SinkCapacity::degree(), true,
                       false, cfg.mass_multiplier, target, cfg.sweep_both);
              break;
            case Method::LFD: {
              rec.eps = cfg.eps;
              rec.params += ";eps=" + fmt_param(cfg.eps);
              LabelWeightedView view(g0, label_fn, cfg.eps);
              fd_fixed(rec, &extra, view, g0, sources, SinkCapacity::degree(), true,
                       false, cfg.mass_multiplier, target, cfg.sweep_both);
              break;
            }
            case Method::PR:
              pr_fixed(rec, g0, g0, pos, total_mass(sources), cfg.mass_multiplier, target);
              break;
            case Method::LPR: {
              rec.eps = cfg.eps;
              rec.params += ";eps=" + fmt_param(cfg.eps);
              LabelWeightedView view(g0, label_fn, cfg.eps);
              pr_fixed(rec, view, g0, pos, total_mass(sources), cfg.mass_multiplier,
                       target);
              break;
            }
            case Method::CLF: {
              NodeSet guess = label_support(global_labels, 1);
              fill_eval(rec, evaluate_cluster(guess, target));
              rec.conductance = safe_conductance(g0, guess);
              break;
            }
            case Method::LABELS:
              throw std::invalid_argument(
                  "LABELS applies to generated noisy labels; use synthetic mode");
          }
        } catch (const std::exception& e) {
          rec.error = e.what();
        }
        rec.runtime_ms = elapsed_ms(start);
        out.push_back(std::move(rec));
        for (auto& r : extra) out.push_back(std::move(r));
      }
    }
  });
  return flatten(per_trial);
}

std::vector<TrialRecord> run_unsupervised(const ExperimentConfig& cfg, const Dataset& ds) {
  if (!ds.has_features) throw std::invalid_argument("unsupervised mode needs node features");
  auto tasks = cluster_tasks(cfg, ds);
  const Graph& g0 = ds.graph;
  std::vector<std::vector<TrialRecord>> per_trial(cfg.trials);

  parallel_trials(cfg.trials, cfg.threads, [&](int t) {
    auto& out = per_trial[t];
    std::mt19937_64 rng = make_stream(cfg.master_seed, static_cast<std::uint64_t>(t));
    for (const ClusterTask& task : tasks) {
      const NodeSet& target = *task.members;
      NodeId seed_node = target.ids()[uniform_index(rng, target.size())];
      const double vol_k = volume_of(g0, target);
      const double theta0 = cfg.initial_mass_multiplier * vol_k;
      const std::string base_params = "m=" + std::to_string(cfg.m_pseudo);

      const bool need_pipeline = has_method(cfg, Method::FD) || has_method(cfg, Method::PR) ||
                                 has_method(cfg, Method::LFD) ||
                                 has_method(cfg, Method::LPR) || has_method(cfg, Method::CLF);
      PseudoLabelResult pseudo;
      std::string pipeline_error;
      if (need_pipeline) {
        try {
          pseudo = pseudo_label_pipeline(g0, ds.features, seed_node, theta0, cfg.m_pseudo,
                                         rng);
        } catch (const std::exception& e) {
          pipeline_error = e.what();
        }
      }

      LabelAssignment global_labels;
      std::function<std::uint8_t(NodeId)> label_fn;
      if (pipeline_error.empty() && need_pipeline) {
        const bool need_global = cfg.global_predict || has_method(cfg, Method::CLF);
        if (need_global) {
          global_labels = predict_labels(pseudo.model, ds.features);
          label_fn = [&global_labels](NodeId i) { return global_labels[i]; };
        } else {
          label_fn = label_predictor(pseudo.model, ds.features);
        }
      }

      auto emit = [&](const char* name, auto&& body, bool needs_pipeline) {
        TrialRecord rec;
        rec.trial = t;
        rec.cluster = task.cluster_id;
        rec.method = name;
        rec.params = base_params;
        std::vector<TrialRecord> extra;
        auto start = std::chrono::steady_clock::now();
        if (needs_pipeline && !pipeline_error.empty()) {
          rec.error = pipeline_error;
        } else {
          try {
            body(rec, extra);
          } catch (const std::exception& e) {
            rec.error = e.what();
          }
        }
        rec.runtime_ms = elapsed_ms(start);
        out.push_back(std::move(rec));
        for (auto& r : extra) out.push_back(std::move(r));
      };

      for (Method m : cfg.methods) {
        switch (m) {
          case Method::FD: {
            emit(
                "FD_single",
                [&](TrialRecord& rec, std::vector<TrialRecord>& extra) {
                  fd_fixed(rec, &extra, g0, g0, {{seed_node, theta0}},
                           SinkCapacity::degree(), true, false,
                           cfg.initial_mass_multiplier, target, cfg.sweep_both);
                },
                false);
            emit(
                "FD_multi",
                [&](TrialRecord& rec, std::vector<TrialRecord>& extra) {
                  auto sources = seed_masses(g0, pseudo.pos, cfg.mass_multiplier * vol_k,
                                             cfg.mass_per_seed);
                  fd_fixed(rec, &extra, g0, g0, sources, SinkCapacity::degree(), true,
                           false, cfg.mass_multiplier, target, cfg.sweep_both);
                },
                true);
            break;
          }
          case Method::PR: {
            emit(
                "PR_single",
                [&](TrialRecord& rec, std::vector<TrialRecord>&) {
                  pr_fixed(rec, g0, g0, NodeSet({seed_node}), theta0,
                           cfg.initial_mass_multiplier, target);
                },
                false);
            emit(
                "PR_multi",
                [&](TrialRecord& rec, std::vector<TrialRecord>&) {
                  pr_fixed(rec, g0, g0, pseudo.pos, cfg.mass_multiplier * vol_k,
                           cfg.mass_multiplier, target);
                },
                true);
            break;
          }
          case Method::LFD:
            emit(
                "LFD",
                [&](TrialRecord& rec, std::vector<TrialRecord>& extra) {
                  rec.eps = cfg.eps;
                  rec.params += ";eps=" + fmt_param(cfg.eps);
                  LabelWeightedView view(g0, label_fn, cfg.eps);
                  auto sources = seed_masses(g0, pseudo.pos, cfg.mass_multiplier * vol_k,
                                             cfg.mass_per_seed);
                  fd_fixed(rec, &extra, view, g0, sources, SinkCapacity::degree(), true,
                           false, cfg.mass_multiplier, target, cfg.sweep_both);
                },
                true);
            break;
          case Method::LPR:
            emit(
                "LPR",
                [&](TrialRecord& rec, std::vector<TrialRecord>&) {
                  rec.eps = cfg.eps;
                  rec.params += ";eps=" + fmt_param(cfg.eps);
                  LabelWeightedView view(g0, label_fn, cfg.eps);
                  pr_fixed(rec, view, g0, pseudo.pos, cfg.mass_multiplier * vol_k,
                           cfg.mass_multiplier, target);
                },
                true);
            break;
          case Method::CLF:
            emit(
                "CLF",
                [&](TrialRecord& rec, std::vector<TrialRecord>&) {
                  NodeSet guess = label_support(global_labels, 1);
                  fill_eval(rec, evaluate_cluster(guess, target));
                  rec.conductance = safe_conductance(g0, guess);
                },
                true);
            break;
          case Method::LABELS:
            emit(
                "LABELS",
                [&](TrialRecord&, std::vector<TrialRecord>&) {
                  throw std::invalid_argument(
                      "LABELS applies to generated noisy labels; use synthetic mode");
                },
                false);
            break;
        }
      }
    }
  });
  return flatten(per_trial);
}

}  // namespace

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::synthetic: return "synthetic";
    case Mode::supervised: return "supervised";
    case Mode::unsupervised: return "unsupervised";
    case Mode::theory: return "theory";
    case Mode::conjectures: return "conjectures";
  }
  return "?";
}

Mode parse_mode(const std::string& name) {
  if (name == "synthetic") return Mode::synthetic;
  if (name == "supervised") return Mode::supervised;
  if (name == "unsupervised") return Mode::unsupervised;
  if (name == "theory") return Mode::theory;
  if (name == "conjectures") return Mode::conjectures;
  throw std::invalid_argument("unknown mode: " + name);
}

std::string method_name(Method method) {
  switch (method) {
    case Method::FD: return "FD";
    case Method::LFD: return "LFD";
    case Method::PR: return "PR";
    case Method::LPR: return "LPR";
    case Method::LABELS: return "LABELS";
    case Method::CLF: return "CLF";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  std::string up;
  for (char ch : name) up.push_back(static_cast<char>(std::toupper(ch)));
  if (up == "FD") return Method::FD;
  if (up == "LFD") return Method::LFD;
  if (up == "PR") return Method::PR;
  if (up == "LPR") return Method::LPR;
  if (up == "LABELS") return Method::LABELS;
  if (up == "CLF") return Method::CLF;
  throw std::invalid_argument("unknown method: " + name);
}

const std::vector<ConjectureRow>& conjecture_rows() {
  static const std::vector<ConjectureRow> rows = {
      {0.0015, 0.7, 0.6},
      {0.0015, 0.6, 0.65},
      {0.0075, 0.8, 0.7},
      {0.0075, 0.9, 0.9},
  };
  return rows;
}

Dataset make_builtin_dataset(const BuiltinDatasetSpec& spec) {
  if (spec.block_size < 2 || spec.blocks < 2)
    throw std::invalid_argument("builtin dataset needs blocks >= 2 and block_size >= 2");
  std::mt19937_64 rng = make_stream(spec.seed, 0);
  SbmGraph sbm = generate_sbm(spec.block_size, spec.blocks, spec.p, spec.q, rng);
  const NodeId n = sbm.graph.node_count();

  Dataset ds;
  ds.graph = std::move(sbm.graph);
  ds.features.dims = 2;
  ds.features.data.assign(static_cast<size_t>(n) * 2, 0.0);
  const double pi = 3.14159265358979323846;
  // Block means on a circle sized so adjacent means sit feature_gap apart.
  const double radius = spec.feature_gap / (2.0 * std::sin(pi / spec.blocks));
  auto gaussian = [&rng, pi]() {
    double u1 = 1.0 - uniform01(rng);
    double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi * u2);
  };
  for (NodeId i = 0; i < n; ++i) {
    int block = i / spec.block_size;
    double angle = 2.0 * pi * block / spec.blocks;
    double* row = ds.features.row(i);
    row[0] = radius * std::cos(angle) + spec.feature_noise * gaussian();
    row[1] = radius * std::sin(angle) + spec.feature_noise * gaussian();
  }
  ds.has_features = true;
  for (int b = 0; b < spec.blocks; ++b)
    ds.clusters.emplace_back(b, std::move(sbm.clusters[b]));
  ds.original_ids.resize(n);
  for (NodeId i = 0; i < n; ++i) ds.original_ids[i] = i;
  return ds;
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("eps must lie in [0, 1]");
  if (methods.empty()) throw std::invalid_argument("method list is empty");
  if (fixed_alpha() && alpha <= 0.0) throw std::invalid_argument("alpha must be > 0");
  switch (mode) {
    case Mode::synthetic:
    case Mode::theory:
      if (k < 2 || n <= k) throw std::invalid_argument("need 2 <= k < n");
      if (mode == Mode::synthetic && n % k != 0)
        throw std::invalid_argument("synthetic mode needs n to be a multiple of k");
      if (mode == Mode::synthetic && n / k < 2)
        throw std::invalid_argument("synthetic mode needs at least 2 blocks");
      if (p < 0 || p > 1 || q < 0 || q > p)
        throw std::invalid_argument("need 0 <= q <= p <= 1");
      if (a0 < 0 || a0 > 1 || a1 < 0 || a1 > 1)
        throw std::invalid_argument("a0, a1 must lie in [0, 1]");
      break;
    case Mode::conjectures:
      break;
    case Mode::supervised:
    case Mode::unsupervised:
      if (edges_path.empty() && !builtin.present)
        throw std::invalid_argument("dataset mode needs edge/feature paths or builtin_dataset");
      if (g_samples < 1) throw std::invalid_argument("g_samples must be >= 1");
      if (m_pseudo < 1) throw std::invalid_argument("m_pseudo must be >= 1");
      if (mass_multiplier <= 0 || initial_mass_multiplier <= 0)
        throw std::invalid_argument("mass multipliers must be > 0");
      break;
  }
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  ExperimentConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "mode") cfg.mode = parse_mode(value.get<std::string>());
    else if (key == "n") cfg.n = value.get<NodeId>();
    else if (key == "k") cfg.k = value.get<NodeId>();
    else if (key == "p") cfg.p = value.get<double>();
    else if (key == "q") cfg.q = value.get<double>();
    else if (key == "a0") cfg.a0 = value.get<double>();
    else if (key == "a1") cfg.a1 = value.get<double>();
    else if (key == "methods") {
      cfg.methods.clear();
      for (const auto& name : value) cfg.methods.push_back(parse_method(name.get<std::string>()));
    } else if (key == "eps") cfg.eps = value.get<double>();
    else if (key == "alpha") {
      if (!value.is_null()) cfg.alpha = value.get<double>();
    } else if (key == "trials") cfg.trials = value.get<int>();
    else if (key == "seed") cfg.master_seed = value.get<std::uint64_t>();
    else if (key == "threads") cfg.threads = value.get<int>();
    else if (key == "g_samples") cfg.g_samples = value.get<int>();
    else if (key == "m_pseudo") cfg.m_pseudo = value.get<int>();
    else if (key == "mass_multiplier") cfg.mass_multiplier = value.get<double>();
    else if (key == "initial_mass_multiplier") cfg.initial_mass_multiplier = value.get<double>();
    else if (key == "mass_mode") {
      std::string mm = value.get<std::string>();
      if (mm == "per_seed") cfg.mass_per_seed = true;
      else if (mm == "total") cfg.mass_per_seed = false;
      else throw std::invalid_argument("mass_mode must be per_seed or total");
    } else if (key == "edges") cfg.edges_path = value.get<std::string>();
    else if (key == "features") cfg.features_path = value.get<std::string>();
    else if (key == "labels") cfg.labels_path = value.get<std::string>();
    else if (key == "builtin_dataset") {
      cfg.builtin.present = true;
      for (const auto& [bk, bv] : value.items()) {
        if (bk == "block_size") cfg.builtin.block_size = bv.get<NodeId>();
        else if (bk == "blocks") cfg.builtin.blocks = bv.get<NodeId>();
        else if (bk == "p") cfg.builtin.p = bv.get<double>();
        else if (bk == "q") cfg.builtin.q = bv.get<double>();
        else if (bk == "feature_gap") cfg.builtin.feature_gap = bv.get<double>();
        else if (bk == "feature_noise") cfg.builtin.feature_noise = bv.get<double>();
        else if (bk == "seed") cfg.builtin.seed = bv.get<std::uint64_t>();
        else throw std::invalid_argument("unknown builtin_dataset key: " + bk);
      }
    } else if (key == "target_cluster") cfg.target_cluster = value.get<int>();
    else if (key == "sweep_both") cfg.sweep_both = value.get<bool>();
    else if (key == "global_predict") cfg.global_predict = value.get<bool>();
    else if (key == "mc_trials") cfg.mc_trials = value.get<int>();
    else if (key == "sampled_pairs") cfg.sampled_pairs = value.get<int>();
    else if (key == "delta1") cfg.delta1 = value.get<double>();
    else if (key == "delta2") cfg.delta2 = value.get<double>();
    else if (key == "delta3") cfg.delta3 = value.get<double>();
    else if (key == "eps1") cfg.eps1 = value.get<double>();
    else if (key == "eps2") cfg.eps2 = value.get<double>();
    else if (key == "eps3") cfg.eps3 = value.get<double>();
    else if (key == "out") cfg.out_path = value.get<std::string>();
    else if (key == "echo_config") cfg.echo_config = value.get<bool>();
    else throw std::invalid_argument("unknown config key: " + key);
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

std::string ExperimentConfig::to_json() const {
  nlohmann::ordered_json j;
  j["mode"] = mode_name(mode);
  j["n"] = n;
  j["k"] = k;
  j["p"] = p;
  j["q"] = q;
  j["a0"] = a0;
  j["a1"] = a1;
  std::vector<std::string> ms;
  for (Method m : methods) ms.push_back(method_name(m));
  j["methods"] = ms;
  j["eps"] = eps;
  if (fixed_alpha()) j["alpha"] = alpha;
  else j["alpha"] = nullptr;
  j["trials"] = trials;
  j["seed"] = master_seed;
  j["threads"] = threads;
  j["g_samples"] = g_samples;
  j["m_pseudo"] = m_pseudo;
  j["mass_multiplier"] = mass_multiplier;
  j["initial_mass_multiplier"] = initial_mass_multiplier;
  j["mass_mode"] = mass_per_seed ? "per_seed" : "total";
  if (!edges_path.empty()) j["edges"] = edges_path;
  if (!features_path.empty()) j["features"] = features_path;
  if (!labels_path.empty()) j["labels"] = labels_path;
  if (builtin.present) {
    nlohmann::ordered_json b;
    b["block_size"] = builtin.block_size;
    b["blocks"] = builtin.blocks;
    b["p"] = builtin.p;
    b["q"] = builtin.q;
    b["feature_gap"] = builtin.feature_gap;
    b["feature_noise"] = builtin.feature_noise;
    b["seed"] = builtin.seed;
    j["builtin_dataset"] = b;
  }
  j["target_cluster"] = target_cluster;
  j["sweep_both"] = sweep_both;
  j["global_predict"] = global_predict;
  j["mc_trials"] = mc_trials;
  j["sampled_pairs"] = sampled_pairs;
  j["delta1"] = delta1;
  j["delta2"] = delta2;
  j["delta3"] = delta3;
  j["eps1"] = eps1;
  j["eps2"] = eps2;
  j["eps3"] = eps3;
  if (!out_path.empty()) j["out"] = out_path;
  j["echo_config"] = echo_config;
  return j.dump(2);
}

std::vector<TrialRecord> run_experiment(const ExperimentConfig& config) {
  return run_experiment(config, nullptr);
}

std::vector<TrialRecord> run_experiment(const ExperimentConfig& config,
                                        const Dataset* dataset) {
  config.validate();
  switch (config.mode) {
    case Mode::synthetic:
      return run_synthetic(config);
    case Mode::conjectures:
      return run_conjectures(config);
    case Mode::theory:
      throw std::invalid_argument("theory mode emits a report; use run_theory");
    case Mode::supervised:
    case Mode::unsupervised: {
      Dataset local;
      if (dataset == nullptr) {
        if (config.builtin.present)
          local = make_builtin_dataset(config.builtin);
        else
          local = load_dataset(config.edges_path, config.features_path, config.labels_path);
        dataset = &local;
      }
      return config.mode == Mode::supervised ? run_supervised(config, *dataset)
                                             : run_unsupervised(config, *dataset);
    }
  }
  throw std::invalid_argument("unhandled mode");
}

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records) {
  if (records.empty()) throw std::invalid_argument("no records to summarize");
  std::map<std::pair<std::string, std::string>, std::vector<const TrialRecord*>> groups;
  for (const auto& rec : records) groups[{rec.method, rec.params}].push_back(&rec);

  std::vector<SummaryRow> rows;
  auto push_stat = [&](const std::string& method, const std::string& params,
                       const std::string& metric, const std::vector<double>& vals) {
    SummaryRow row;
    row.method = method;
    row.params = params;
    row.metric = metric;
    row.count = static_cast<int>(vals.size());
    if (!vals.empty()) {
      double mean = 0.0;
      for (double v : vals) mean += v;
      mean /= vals.size();
      double var = 0.0;
      for (double v : vals) var += (v - mean) * (v - mean);
      row.mean = mean;
      row.stddev = std::sqrt(var / vals.size());
    }
    rows.push_back(std::move(row));
  };

  for (const auto& [key, group] : groups) {
    const auto& [method, params] = key;
    struct MetricDef {
      const char* name;
      double (*get)(const TrialRecord&);
    };
    static const MetricDef defs[] = {
        {"f1", [](const TrialRecord& r) { return r.f1; }},
        {"f1_paper_variant", [](const TrialRecord& r) { return r.f1_paper_variant; }},
        {"precision", [](const TrialRecord& r) { return r.precision; }},
        {"recall", [](const TrialRecord& r) { return r.recall; }},
        {"conductance", [](const TrialRecord& r) { return r.conductance; }},
        {"touched_nodes",
         [](const TrialRecord& r) { return static_cast<double>(r.touched_nodes); }},
        {"pushes", [](const TrialRecord& r) { return static_cast<double>(r.pushes); }},
    };
    for (const auto& def : defs) {
      std::vector<double> vals;
      for (const TrialRecord* rec : group) {
        if (!rec->error.empty()) continue;
        double v = def.get(*rec);
        if (std::isnan(v)) continue;
        vals.push_back(v);
      }
      push_stat(method, params, def.name, vals);
    }
    std::vector<double> err;
    for (const TrialRecord* rec : group) err.push_back(rec->error.empty() ? 0.0 : 1.0);
    push_stat(method, params, "error_rate", err);
  }
  return rows;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string records_to_csv(const std::vector<TrialRecord>& records, bool include_runtime) {
  std::string out =
      "trial,cluster,method,f1,f1_paper_variant,precision,recall,conductance,"
      "touched_nodes,pushes";
  if (include_runtime) out += ",runtime_ms";
  out += ",alpha,theta,eps,oracle,error,params\n";
  for (const auto& r : records) {
    out += std::to_string(r.trial) + ',' + std::to_string(r.cluster) + ',' +
           csv_escape(r.method) + ',' + fmt(r.f1) + ',' + fmt(r.f1_paper_variant) + ',' +
           fmt(r.precision) + ',' + fmt(r.recall) + ',' + fmt(r.conductance) + ',' +
           std::to_string(r.touched_nodes) + ',' + std::to_string(r.pushes);
    if (include_runtime) out += ',' + fmt(r.runtime_ms);
    out += ',' + fmt(r.alpha) + ',' + fmt(r.theta) + ',' + fmt(r.eps) + ',' +
           (r.oracle ? std::string("1") : std::string("0")) + ',' + csv_escape(r.error) +
           ',' + csv_escape(r.params) + '\n';
  }
  return out;
}

std::string summary_to_csv(const std::vector<SummaryRow>& rows) {
  std::string out = "method,params,metric,mean,std,count\n";
  for (const auto& r : rows) {
    out += csv_escape(r.method) + ',' + csv_escape(r.params) + ',' + r.metric + ',' +
           fmt(r.mean) + ',' + fmt(r.stddev) + ',' + std::to_string(r.count) + '\n';
  }
  return out;
}

std::string TheoryReport::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json pj;
  pj["n"] = params.n;
  pj["k"] = params.k;
  pj["p"] = params.p;
  pj["q"] = params.q;
  pj["a0"] = params.a0;
  pj["a1"] = params.a1;
  pj["gamma"] = params.structural_signal();
  pj["delta"] = {params.delta1, params.delta2, params.delta3};
  pj["eps"] = {params.eps1, params.eps2, params.eps3};
  pj["assumption_holds"] = params.assumption_holds();
  pj["hypotheses_hold"] = params.hypotheses_hold();
  j["params"] = pj;

  auto render = [](double raw) {
    nlohmann::ordered_json v;
    v["raw"] = raw;
    v["clamped"] = clamp_unit(raw);
    return v;
  };
  nlohmann::ordered_json sj;
  sj["f1_lower"] = render(simplified.f1_lower);
  sj["a0_threshold"] = render(simplified.a0_threshold);
  j["simplified"] = sj;

  nlohmann::ordered_json fj;
  fj["r"] = formal.r;
  fj["r_prime"] = formal.r_prime;
  fj["theta_dagger"] = formal.theta_dagger;
  fj["fp_lower"] = formal.fp_lower;
  fj["fp_upper"] = formal.fp_upper;
  fj["f1_lower"] = render(formal.f1_lower);
  fj["a0_threshold"] = render(formal.a0_threshold);
  fj["hypotheses_ok"] = formal.hypotheses_ok;
  j["formal"] = fj;

  nlohmann::ordered_json mj;
  mj["c1_holds"] = margins.c1_holds;
  mj["c1_lhs"] = margins.c1_lhs;
  mj["c1_rhs"] = margins.c1_rhs;
  mj["c2_holds"] = margins.c2_holds;
  mj["c2_lhs"] = margins.c2_lhs;
  mj["c2_rhs"] = margins.c2_rhs;
  j["conjecture_margins"] = mj;

  j["labels_f1"] = labels_f1_value;

  if (has_monte_carlo) {
    nlohmann::ordered_json lj;
    lj["trials"] = lemmas.trials;
    lj["sampled_pairs"] = lemmas.sampled_pairs;
    lj["outside_policy"] = "none";
    auto lemma = [](double bound, int failures, int trials, double prob_bound) {
      nlohmann::ordered_json v;
      v["bound"] = bound;
      v["failures"] = failures;
      v["failure_rate"] = trials > 0 ? static_cast<double>(failures) / trials : 0.0;
      v["prob_bound"] = prob_bound;
      return v;
    };
    lj["l1"] = lemma(lemmas.l1_bound, lemmas.l1_failures, lemmas.trials,
                     lemmas.l1_prob_bound);
    lj["l2"] = lemma(lemmas.l2_bound, lemmas.l2_failures, lemmas.trials,
                     lemmas.l2_prob_bound);
    lj["l3"] = lemma(lemmas.l3_bound, lemmas.l3_failures, lemmas.trials,
                     lemmas.l3_prob_bound);
    lj["mean_cut_ratio"] = lemmas.mean_cut_ratio;
    lj["expected_cut_ratio"] = lemmas.expected_cut_ratio;
    lj["mean_vol_ratio"] = lemmas.mean_vol_ratio;
    lj["expected_vol_ratio"] = lemmas.expected_vol_ratio;
    j["monte_carlo"] = lj;
  }
  return j.dump(2);
}

TheoryReport run_theory(const ExperimentConfig& cfg) {
  TheoryReport rep;
  rep.params.n = cfg.n;
  rep.params.k = cfg.k;
  rep.params.p = cfg.p;
  rep.params.q = cfg.q;
  rep.params.a0 = cfg.a0;
  rep.params.a1 = cfg.a1;
  rep.params.delta1 = cfg.delta1;
  rep.params.delta2 = cfg.delta2;
  rep.params.delta3 = cfg.delta3;
  rep.params.eps1 = cfg.eps1;
  rep.params.eps2 = cfg.eps2;
  rep.params.eps3 = cfg.eps3;
  rep.simplified = bounds_simplified(rep.params);
  rep.formal = bounds_formal(rep.params);
  rep.margins = conjecture_margins(cfg.n, cfg.k, cfg.p, cfg.q, cfg.a0, cfg.a1);
  rep.labels_f1_value = labels_f1(cfg.n, cfg.k, cfg.a0, cfg.a1);
  if (cfg.mc_trials > 0 && cfg.n <= 20000) {
    std::mt19937_64 rng = make_stream(cfg.master_seed, 0);
    rep.lemmas = monte_carlo_verify(rep.params, OutsidePolicy::none(), cfg.mc_trials, rng,
                                    cfg.sampled_pairs);
    rep.has_monte_carlo = true;
  }
  return rep;
}

}  // namespace lgc
