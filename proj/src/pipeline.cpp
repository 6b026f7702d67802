#include "doap/pipeline.hpp"

#include "doap/approx.hpp"
#include "doap/decision.hpp"
#include "doap/exact.hpp"
#include "doap/path_instance.hpp"

namespace doap {

namespace {

Solution to_tree(const PathInstance& inst, const Solution& s) {
  return {inst.vertex(s.u), inst.vertex(s.v), s.shortcut_cost, s.diameter};
}

PathInstance induce(const Tree& tree, const CostOracle& cost) { return induce_instance(tree, decompose(tree), cost); }

}  // namespace

Solution solve_metric(const Tree& tree, const CostOracle& cost, Exec exec) {
  const auto inst = induce(tree, cost);
  return to_tree(inst, solve_exact(inst, exec));
}

Solution solve_approx(const Tree& tree, const CostOracle& cost, double epsilon, Exec exec) {
  const auto inst = induce(tree, cost);
  return to_tree(inst, solve_approx(inst, epsilon, exec).solution);
}

std::optional<Solution> decide(const Tree& tree, const CostOracle& cost, double lambda) {
  const auto inst = induce(tree, cost);
  const auto hit = feasible(inst, lambda);
  if (!hit) return std::nullopt;
  const auto [i, j] = *hit;
  return Solution{inst.vertex(i), inst.vertex(j), inst.raw_cost(i, j), eval_d(inst, i, j)};
}

}  // namespace doap
