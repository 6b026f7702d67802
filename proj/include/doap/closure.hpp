#pragma once

#include <vector>

#include "doap/common.hpp"
#include "doap/cost.hpp"
#include "doap/tree.hpp"

namespace doap {

/// Upper-triangular (diagonal included) table over path positions 1..N.
class PathTable {
 public:
  PathTable() = default;
  PathTable(Index n, double fill);

  Index size() const noexcept { return n_; }
  double& at(Index a, Index b) { return values_[slot(a, b)]; }
  double at(Index a, Index b) const { return values_[slot(a, b)]; }
  const std::vector<double>& packed() const noexcept { return values_; }
  std::vector<double> release() && { return std::move(values_); }

 private:
  std::size_t slot(Index a, Index b) const {
    if (a > b) std::swap(a, b);
    const auto r = static_cast<std::size_t>(a - 1);
    return r * static_cast<std::size_t>(n_) - r * (r - 1) / 2 + static_cast<std::size_t>(b - a);
  }

  Index n_ = 0;
  std::vector<double> values_;
};

/// c-hat, c-tilde and c-bar between diametral-path vertices. Diagonal cells
/// of c-hat only see pairs u != v inside one hanging subtree (+inf if none).
struct ClosureTable {
  PathTable chat;
  PathTable ctilde;
  PathTable cbar;
};

/// c-hat by bucketing all vertex pairs by hanging subtree: O(n^2) cost calls.
PathTable direct_costs(const Tree& tree, const TreeDecomposition& dec, const CostOracle& cost,
                       Exec exec = Exec::parallel);

/// The forward pass (c-tilde) and then the backward pass (c-bar), in place.
void forward_pass(PathTable& t, const TreeDecomposition& dec);
void backward_pass(PathTable& t, const TreeDecomposition& dec);

ClosureTable path_closure(const Tree& tree, const TreeDecomposition& dec, const CostOracle& cost,
                          Exec exec = Exec::parallel);

/// Tree-level answer for an arbitrary nonnegative symmetric cost.
struct GeneralSolution {
  Solution solution;        // path vertices (tree ids), closure cost, optimal diameter
  Solution realized;        // a pair whose original cost achieves the same diameter
  TreeDecomposition decomposition;
};

GeneralSolution solve_general(const Tree& tree, const CostOracle& cost, Exec exec = Exec::parallel);

/// A pair (u', v'), u' != v', minimising d(a,u') + c(u',v') + d(v',b).
/// O(n^2). Returns {u', v', c(u',v'), that minimum}.
Solution realize_shortcut(const Tree& tree, const CostOracle& cost, Vertex a, Vertex b);

}  // namespace doap
