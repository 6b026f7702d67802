#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "doap/common.hpp"
#include "doap/cost.hpp"
#include "doap/tree.hpp"

namespace doap {

/// Node-weighted path instance: path v_1..v_N with edge weights delta,
/// node weights w, their relaxation omega, and a graph-metric cost between
/// path vertices.
///
/// Accessors take 1-based path indices. Distances between path vertices
/// are always prefix differences.
class PathInstance {
 public:
  /// `delta` has N-1 entries (delta[k] is the edge between positions k+1 and
  /// k+2), `w` has N entries. `vertex_of` maps path positions to the cost
  /// oracle's vertex ids; empty means position i is oracle vertex i.
  /// Throws InputError unless w(1) = w(N) = 0 and
  /// 0 <= w(i) <= min(d(1,i), d(i,N)).
  PathInstance(std::vector<double> delta, std::vector<double> w, CostOracle cost,
               std::vector<Vertex> vertex_of = {});

  Index size() const noexcept { return n_; }

  double d(Index i, Index j) const noexcept { return i <= j ? prefix_[j] - prefix_[i] : prefix_[i] - prefix_[j]; }
  double from_start(Index i) const noexcept { return prefix_[i]; }
  double to_end(Index i) const noexcept { return prefix_[n_] - prefix_[i]; }
  double length() const noexcept { return prefix_[n_]; }

  double w(Index i) const noexcept { return w_[i]; }
  double omega(Index i) const noexcept { return omega_[i]; }
  /// Shortcut cost capped at d(i,j). A dearer shortcut never shortens a
  /// route, so no diameter changes, and the cap keeps the graph-triangle
  /// inequality.
  double cost(Index i, Index j) const { return std::min(raw_cost(i, j), d(i, j)); }
  double raw_cost(Index i, Index j) const { return cost_(vertex_[i], vertex_[j]); }
  Vertex vertex(Index i) const noexcept { return vertex_[i]; }

  const CostOracle& oracle() const noexcept { return cost_; }

 private:
  Index n_;
  std::vector<double> prefix_;  // 1-based, prefix_[1] = 0
  std::vector<double> w_;       // 1-based
  std::vector<double> omega_;   // 1-based
  std::vector<Vertex> vertex_;  // 1-based
  CostOracle cost_;
};

/// Path instance over the decomposition's diametral path with w taken from
/// the hanging subtrees. The cost is consulted on the path's tree vertices.
PathInstance induce_instance(const Tree& tree, const TreeDecomposition& dec, const CostOracle& cost);

/// omega(i) = max_j (w(j) - d(i,j)), by one right-to-left and one
/// left-to-right sweep. 0-based in and out: `delta` has N-1 entries, `w` N.
std::vector<double> relaxed_weights(std::span<const double> delta, std::span<const double> w);

/// U, S and E of the pair (i,j). S and E locate their split index by binary
/// search, so the whole call is O(log N).
struct EndComponents {
  double U;
  double S;
  double E;
};

EndComponents eval_use(const PathInstance& inst, Index i, Index j);

/// C(i,j): the largest omega-weighted distance between two vertices strictly
/// inside the cycle. Linear two-pointer scan; -inf when j - i < 3.
double eval_c(const PathInstance& inst, Index i, Index j);

/// max{U, S, E, C}, i.e. the node-weighted diameter of the path plus (i,j).
double eval_d(const PathInstance& inst, Index i, Index j);

/// C(i,j) by the definitional double loop over i < k < h < j.
double eval_c_brute(const PathInstance& inst, Index i, Index j);

/// max over k < h of w(k) + d_{i,j}(k,h) + w(h), straight from the
/// definition with the raw node weights w. O(N^2).
double eval_d_brute(const PathInstance& inst, Index i, Index j);

}  // namespace doap
