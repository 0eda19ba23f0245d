#pragma once

#include "lgc/graph.hpp"

namespace lgc {

struct ClusterEval {
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;
  double f1 = 0.0;
  double f1_paper_variant = 0.0;  // |K| / (|K| + fp/2 + fn/2)
  double precision = 0.0;
  double recall = 0.0;
};

inline ClusterEval evaluate_cluster(const NodeSet& found, const NodeSet& target) {
  ClusterEval e;
  const auto& a = found.ids();
  const auto& b = target.ids();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++e.tp;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++e.fp;
      ++i;
    } else {
      ++e.fn;
      ++j;
    }
  }
  e.fp += a.size() - i;
  e.fn += b.size() - j;

  double denom = 2.0 * e.tp + e.fp + e.fn;
  e.f1 = denom > 0 ? 2.0 * e.tp / denom : 0.0;
  double k = static_cast<double>(target.size());
  double denom_variant = 2.0 * k + e.fp + e.fn;
  e.f1_paper_variant = denom_variant > 0 ? 2.0 * k / denom_variant : 0.0;
  e.precision = e.tp + e.fp > 0 ? static_cast<double>(e.tp) / (e.tp + e.fp) : 0.0;
  e.recall = e.tp + e.fn > 0 ? static_cast<double>(e.tp) / (e.tp + e.fn) : 0.0;
  return e;
}

}  // namespace lgc
