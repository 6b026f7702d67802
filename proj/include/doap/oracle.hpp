#pragma once

#include <vector>

#include "doap/closure.hpp"
#include "doap/common.hpp"
#include "doap/cost.hpp"
#include "doap/path_instance.hpp"
#include "doap/tree.hpp"

namespace doap {

/// Brute-force references. Small inputs only.

/// Diameter of T + (u,v) with the given shortcut cost, from a precomputed
/// all_pairs_distances table. O(n^2).
double augmented_diameter(const Tree& tree, const std::vector<double>& dist, Vertex u, Vertex v, double shortcut_cost);
double augmented_diameter(const Tree& tree, Vertex u, Vertex v, double shortcut_cost);

/// Maximum over all pairs of tree distance.
double tree_diameter(const Tree& tree);

/// Exhaustive optimum over all n(n-1)/2 shortcuts; ties to the smallest u,
/// then v. O(n^4).
Solution best_shortcut_brute(const Tree& tree, const CostOracle& cost, Exec exec = Exec::parallel);

/// Exhaustive optimum of eval_D_brute over all i < j. O(N^4).
Solution wdoap_brute(const PathInstance& inst);

/// min over u' != v' of d(v_a,u') + c(u',v') + d(v',v_b) for every path pair,
/// diagonal included. O(N^2 n^2).
PathTable closure_brute(const Tree& tree, const std::vector<Vertex>& path, const CostOracle& cost);

}  // namespace doap
