#pragma once

#include "lgc/flow_diffusion.hpp"
#include "lgc/graph.hpp"

namespace lgc {

struct SweepResult {
  NodeSet cluster;
  double conductance = 0.0;
};

// Orders the support of x by score (x_i, or x_i / degree(i) when
// normalize_by_degree is set) descending with ties broken by ascending node
// id, then returns the prefix of minimal conductance.  Conductance is always
// measured on the graph passed here, never on a reweighted one; prefixes
// equal to the whole vertex set are skipped.
SweepResult sweep_cut(const Graph& g, const Embedding& x, bool normalize_by_degree);

}  // namespace lgc
