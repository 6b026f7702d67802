#pragma once

#include <vector>

#include "doap/common.hpp"
#include "doap/path_instance.hpp"

namespace doap {

struct ApproxPlan {
  double epsilon = 0;
  double width = 0;                  // L = epsilon * d(1,N) / 18
  std::vector<Index> representatives;  // increasing, always starts at 1 and ends at N
};

/// Index i falls in window max(1, ceil(d(1,i)/L)), capped at ceil(18/epsilon);
/// each window keeps its max-omega index (smallest on ties). O(N).
/// Throws InputError for epsilon <= 0 or non-finite.
ApproxPlan representatives(const PathInstance& inst, double epsilon);

/// The instance restricted to the plan's representatives, with omega as the
/// node weights and the same cost oracle.
PathInstance restrict_instance(const PathInstance& inst, const ApproxPlan& plan);

struct ApproxRun {
  ApproxPlan plan;
  Solution solution;  // path indices of `inst`; diameter measured on all of `inst`
};

/// (1+epsilon)-approximate shortcut for a graph-metric path instance.
ApproxRun solve_approx(const PathInstance& inst, double epsilon, Exec exec = Exec::parallel);

}  // namespace doap
