#pragma once

#include <optional>

#include "doap/common.hpp"
#include "doap/cost.hpp"
#include "doap/tree.hpp"

namespace doap {

/// Tree-level entry points. Returned u/v are tree vertex ids and the
/// diameter is that of T + (u,v).

/// Graph-metric cost: diametral path, induced instance, exact solver.
Solution solve_metric(const Tree& tree, const CostOracle& cost, Exec exec = Exec::parallel);

/// Graph-metric cost, (1+epsilon)-approximate.
Solution solve_approx(const Tree& tree, const CostOracle& cost, double epsilon, Exec exec = Exec::parallel);

/// Some shortcut with diameter <= lambda, or nullopt. Graph-metric cost.
std::optional<Solution> decide(const Tree& tree, const CostOracle& cost, double lambda);

}  // namespace doap
