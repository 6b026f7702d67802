#include "doap/closure.hpp"

#include <algorithm>

#include "doap/exact.hpp"
#include "doap/path_instance.hpp"

namespace doap {

PathTable::PathTable(Index n, double fill)
    : n_(n), values_(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1) / 2, fill) {}

PathTable direct_costs(const Tree& tree, const TreeDecomposition& dec, const CostOracle& cost, Exec exec) {
  const Vertex n = tree.vertex_count();
  const Index N = dec.path_length();
  if (cost.vertex_count() < n) throw InputError(InputError::Code::bad_cost, "cost oracle covers fewer vertices than the tree");

  std::vector<std::vector<Vertex>> members(N + 1);
  for (Vertex u = 1; u <= n; ++u) members[dec.subtree_of[u]].push_back(u);

  PathTable chat(N, kInf);
  // Row a is written only by iteration a.
#pragma omp parallel for schedule(dynamic, 4) if (exec == Exec::parallel)
  for (Index a = 1; a <= N; ++a) {
    for (Vertex u : members[a]) {
      const double du = dec.hang_depth[u];
      for (Vertex v = 1; v <= n; ++v) {
        const Index b = dec.subtree_of[v];
        if (b < a || v == u) continue;
        const double via = (du + dec.hang_depth[v]) + cost(u, v);
        double& cell = chat.at(a, b);
        if (via < cell) cell = via;
      }
    }
  }
  return chat;
}

void forward_pass(PathTable& t, const TreeDecomposition& dec) {
  const Index N = t.size();
  for (Index a = 1; a <= N; ++a) {
    for (Index b = a; b <= N; ++b) {
      double best = t.at(a, b);
      if (b - 1 >= a) best = std::min(best, t.at(a, b - 1) + dec.delta[b - 2]);
      if (a > 1) best = std::min(best, t.at(a - 1, b) + dec.delta[a - 2]);
      t.at(a, b) = best;
    }
  }
}

void backward_pass(PathTable& t, const TreeDecomposition& dec) {
  const Index N = t.size();
  for (Index a = N; a >= 1; --a) {
    for (Index b = N; b >= a; --b) {
      double best = t.at(a, b);
      if (a + 1 <= b) best = std::min(best, t.at(a + 1, b) + dec.delta[a - 1]);
      if (b + 1 <= N) best = std::min(best, t.at(a, b + 1) + dec.delta[b - 1]);
      t.at(a, b) = best;
    }
  }
}

ClosureTable path_closure(const Tree& tree, const TreeDecomposition& dec, const CostOracle& cost, Exec exec) {
  ClosureTable out;
  out.chat = direct_costs(tree, dec, cost, exec);
  out.ctilde = out.chat;
  forward_pass(out.ctilde, dec);
  out.cbar = out.ctilde;
  backward_pass(out.cbar, dec);
  return out;
}

GeneralSolution solve_general(const Tree& tree, const CostOracle& cost, Exec exec) {
  GeneralSolution out;
  out.decomposition = decompose(tree);
  const auto& dec = out.decomposition;
  const Index N = dec.path_length();

  PathTable table = direct_costs(tree, dec, cost, exec);
  forward_pass(table, dec);
  backward_pass(table, dec);
  auto closure = CostOracle::triangular(N, std::move(table).release(), CostClass::graph_metric);

  std::vector<double> w(dec.hang_weight.begin() + 1, dec.hang_weight.end());
  const PathInstance inst(dec.delta, std::move(w), std::move(closure));
  const Solution best = solve_exact(inst, exec);

  const Vertex a = dec.path[best.u - 1];
  const Vertex b = dec.path[best.v - 1];
  out.solution = {a, b, best.shortcut_cost, best.diameter};
  out.realized = realize_shortcut(tree, cost, a, b);
  out.realized.diameter = best.diameter;
  return out;
}

Solution realize_shortcut(const Tree& tree, const CostOracle& cost, Vertex a, Vertex b) {
  const Vertex n = tree.vertex_count();
  const auto from_a = tree_distances_from(tree, a);
  const auto from_b = tree_distances_from(tree, b);
  Solution best{0, 0, 0.0, kInf};
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u == v) continue;
      const double c = cost(u, v);
      const double via = (from_a[u] + from_b[v]) + c;
      if (via < best.diameter) best = {u, v, c, via};
    }
  }
  return best;
}

}  // namespace doap
