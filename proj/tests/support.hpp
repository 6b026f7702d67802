#pragma once

#include <vector>

#include "doap/cost.hpp"
#include "doap/generate.hpp"
#include "doap/path_instance.hpp"
#include "doap/tree.hpp"

namespace testing_support {

using namespace doap;

// v1 - v2 - ... - vn with the given weights
inline Tree chain(std::vector<double> weights) {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    edges.push_back({static_cast<Vertex>(k + 1), static_cast<Vertex>(k + 2), weights[k]});
  }
  return build_tree(static_cast<Vertex>(weights.size() + 1), std::move(edges));
}

inline Tree p5() { return chain({1, 1, 1, 1}); }

// v1 - v2 - v3 (2, 2) with a leaf 4 on v2 at distance 1
inline Tree caterpillar() { return build_tree(4, {{1, 2, 2}, {2, 3, 2}, {2, 4, 1}}); }

inline PathInstance p5_unit_cost() {
  return PathInstance({1, 1, 1, 1}, {0, 0, 0, 0, 0}, CostOracle::constant(5, 1));
}

// Euclidean points for a tree, dominated by tree distance.
inline CostOracle euclidean_for(const Tree& t, Rng& rng, int dim = 2) {
  return CostOracle::euclidean(embed_tree(t, dim, rng));
}

inline Tree any_tree(Vertex n, Rng& rng) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return random_tree(n, {1, 100}, rng);
    case 1: return caterpillar_tree(n, {1, 100}, rng);
    default: return path_tree(n, {1, 100}, rng);
  }
}

// Either a Euclidean embedding or a constant cost, both graph-metric.
inline CostOracle metric_cost_for(const Tree& t, Rng& rng) {
  if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
    return CostOracle::constant(t.vertex_count(), std::uniform_int_distribution<int>(0, 150)(rng));
  }
  return euclidean_for(t, rng, std::uniform_int_distribution<int>(1, 3)(rng));
}

}  // namespace testing_support
