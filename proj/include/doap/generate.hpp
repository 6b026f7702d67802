#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "doap/cost.hpp"
#include "doap/path_instance.hpp"
#include "doap/tree.hpp"

namespace doap {

using Rng = std::mt19937_64;

/// Integer edge weights drawn uniformly from [lo, hi].
struct WeightRange {
  int lo = 1;
  int hi = 100;
};

/// Vertex k > 1 attaches to a uniformly random earlier vertex.
Tree random_tree(Vertex n, WeightRange weights, Rng& rng);
/// 1 - 2 - ... - n.
Tree path_tree(Vertex n, WeightRange weights, Rng& rng);
/// A spine of ceil(n/2) vertices with the rest hung one each off random
/// spine vertices.
Tree caterpillar_tree(Vertex n, WeightRange weights, Rng& rng);

/// Integer points in `dim` dimensions, placed by walking the tree from vertex
/// 1 with every step no longer than its edge. The Euclidean cost is then a
/// metric dominated by tree distance, so graph-metric.
std::vector<std::vector<double>> embed_tree(const Tree& tree, int dim, Rng& rng);

/// Symmetric integer matrix with entries in [lo, hi], no metric property.
/// Row-major n*n for CostOracle::matrix.
std::vector<double> random_matrix(Vertex n, int lo, int hi, Rng& rng);

/// Random path instance with N positions, integer edge weights in [1, max_edge]
/// and integer node weights within their bounds. The cost is the graph-metric
/// closure (over the path) of a random symmetric integer matrix in [0, max_cost].
PathInstance random_path_instance(Index N, int max_edge, int max_cost, Rng& rng);

}  // namespace doap
