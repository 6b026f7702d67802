#include "doap/approx.hpp"

#include <algorithm>
#include <cmath>

#include "doap/exact.hpp"

namespace doap {

ApproxPlan representatives(const PathInstance& inst, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InputError(InputError::Code::parse, "epsilon must be a positive finite number");
  }
  const Index N = inst.size();
  ApproxPlan plan;
  plan.epsilon = epsilon;
  plan.width = epsilon * inst.length() / 18.0;
  const double windows = std::max(1.0, std::ceil(18.0 / epsilon));

  // windows are met in order along the path
  std::vector<Index> picked{1};
  double current = 0;
  Index best = 0;
  for (Index i = 1; i <= N; ++i) {
    const double k = std::min(windows, std::max(1.0, std::ceil(inst.from_start(i) / plan.width)));
    if (k != current) {
      if (best != 0) picked.push_back(best);
      current = k;
      best = i;
    } else if (inst.omega(i) > inst.omega(best)) {
      best = i;
    }
  }
  picked.push_back(best);
  picked.push_back(N);
  std::sort(picked.begin(), picked.end());
  picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
  plan.representatives = std::move(picked);
  return plan;
}

PathInstance restrict_instance(const PathInstance& inst, const ApproxPlan& plan) {
  const auto& reps = plan.representatives;
  std::vector<double> delta, w;
  std::vector<Vertex> vertex_of;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    if (k > 0) delta.push_back(inst.d(reps[k - 1], reps[k]));
    w.push_back(inst.omega(reps[k]));
    vertex_of.push_back(inst.vertex(reps[k]));
  }
  return PathInstance(std::move(delta), std::move(w), inst.oracle(), std::move(vertex_of));
}

ApproxRun solve_approx(const PathInstance& inst, double epsilon, Exec exec) {
  ApproxRun run;
  run.plan = representatives(inst, epsilon);
  const PathInstance small = restrict_instance(inst, run.plan);
  const Solution s = solve_exact(small, exec);
  const Index i = run.plan.representatives[s.u - 1];
  const Index j = run.plan.representatives[s.v - 1];
  run.solution = {i, j, inst.raw_cost(i, j), eval_d(inst, i, j)};
  return run;
}

}  // namespace doap
