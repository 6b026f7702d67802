#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "doap/common.hpp"
#include "doap/envelope.hpp"
#include "doap/path_instance.hpp"

namespace doap {

/// Smallest value v with (weight of items <= v) >= half the total weight.
/// Expected linear time. Throws std::invalid_argument on empty input or a
/// nonpositive weight.
double weighted_median(std::vector<std::pair<double, double>> items);

/// Answers "is D* < lambda?" through the search procedure and counts calls.
/// D* itself is never known to the solver.
class Probe {
 public:
  explicit Probe(const PathInstance& inst) : inst_(&inst) {}
  bool optimum_below(double lambda);
  bool at_most_optimum(double value) { return !optimum_below(value); }
  std::int64_t calls() const noexcept { return calls_; }

 private:
  const PathInstance* inst_;
  std::int64_t calls_ = 0;
};

/// r_i and ell_N relative to D*. 1-based, r[N] = N.
struct Precomputed {
  std::vector<Index> r;
  Index ell_n = 0;
  bool degenerate = false;  // D* = d(1,N): every pair is optimal
};

/// Also fills `degenerate` when the ell_N search finds ell_N = 1.
Precomputed precompute_indices(const PathInstance& inst, Probe& probe, Exec exec = Exec::parallel);

/// f(i,j) = max{U(i,j), E-bar(i,j)} with E-bar taken at the given ell_N.
double reduction_value(const PathInstance& inst, Index ell_n, Index i, Index j);

/// psi_i = min j with f(i,j) <= D*, 0 when no j qualifies. 1-based.
std::vector<Index> reduce_candidates(const PathInstance& inst, const Precomputed& pre, Probe& probe,
                                     Exec exec = Exec::parallel);

struct Selection {
  std::vector<double> x;    // cycle length d(i,psi_i) + c(i,psi_i)
  std::vector<double> eta;  // kInf where psi_i is undefined
  Index alpha = 0;
};

/// The lines phi_k for k < ell_N: a flat one and a slope-1 one each.
std::vector<Line> cycle_lines(const PathInstance& inst, const Precomputed& pre);

Selection select_best(const PathInstance& inst, const Precomputed& pre, std::span<const Index> psi,
                      Exec exec = Exec::parallel);

struct ExactRun {
  Solution solution;  // u, v are path indices
  Precomputed pre;
  std::vector<Index> psi;
  Selection selection;
  std::int64_t probes = 0;
};

/// Optimal shortcut of a path instance with graph-metric cost. O(N log N).
ExactRun solve_exact_traced(const PathInstance& inst, Exec exec = Exec::parallel);
Solution solve_exact(const PathInstance& inst, Exec exec = Exec::parallel);

}  // namespace doap
