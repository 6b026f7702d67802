#include "doap/oracle.hpp"

#include <algorithm>
#include <string>

namespace doap {

namespace {

void check_pair(const Tree& tree, Vertex u, Vertex v) {
  if (!tree.contains(u) || !tree.contains(v) || u == v) {
    throw InputError(InputError::Code::vertex_out_of_range,
                     "shortcut (" + std::to_string(u) + "," + std::to_string(v) + ") needs two distinct tree vertices");
  }
}

}  // namespace

double augmented_diameter(const Tree& tree, const std::vector<double>& dist, Vertex u, Vertex v, double shortcut_cost) {
  check_pair(tree, u, v);
  const Vertex n = tree.vertex_count();
  const std::size_t stride = static_cast<std::size_t>(n) + 1;
  const double* du = dist.data() + u * stride;
  const double* dv = dist.data() + v * stride;
  double diam = 0.0;
  for (Vertex a = 1; a <= n; ++a) {
    const double* da = dist.data() + a * stride;
    for (Vertex b = a + 1; b <= n; ++b) {
      const double through_uv = (du[a] + dv[b]) + shortcut_cost;
      const double through_vu = (dv[a] + du[b]) + shortcut_cost;
      diam = std::max(diam, std::min({da[b], through_uv, through_vu}));
    }
  }
  return diam;
}

double augmented_diameter(const Tree& tree, Vertex u, Vertex v, double shortcut_cost) {
  return augmented_diameter(tree, all_pairs_distances(tree), u, v, shortcut_cost);
}

double tree_diameter(const Tree& tree) {
  const auto dist = all_pairs_distances(tree);
  return *std::max_element(dist.begin(), dist.end());
}

Solution best_shortcut_brute(const Tree& tree, const CostOracle& cost, Exec exec) {
  const Vertex n = tree.vertex_count();
  const auto dist = all_pairs_distances(tree, exec);
  std::vector<Solution> row_best(n + 1, Solution{0, 0, 0.0, kInf});
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
  for (Vertex u = 1; u < n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      const double c = cost(u, v);
      const double diam = augmented_diameter(tree, dist, u, v, c);
      if (diam < row_best[u].diameter) row_best[u] = {u, v, c, diam};
    }
  }
  Solution best{0, 0, 0.0, kInf};
  for (Vertex u = 1; u < n; ++u) {
    if (row_best[u].diameter < best.diameter) best = row_best[u];
  }
  return best;
}

Solution wdoap_brute(const PathInstance& inst) {
  const Index N = inst.size();
  Solution best{0, 0, 0.0, kInf};
  for (Index i = 1; i < N; ++i) {
    for (Index j = i + 1; j <= N; ++j) {
      const double diam = eval_d_brute(inst, i, j);
      if (diam < best.diameter) best = {i, j, inst.raw_cost(i, j), diam};
    }
  }
  return best;
}

PathTable closure_brute(const Tree& tree, const std::vector<Vertex>& path, const CostOracle& cost) {
  const Vertex n = tree.vertex_count();
  const auto N = static_cast<Index>(path.size());
  const auto dist = all_pairs_distances(tree);
  const std::size_t stride = static_cast<std::size_t>(n) + 1;
  PathTable out(N, kInf);
  for (Index a = 1; a <= N; ++a) {
    for (Index b = a; b <= N; ++b) {
      const double* da = dist.data() + path[a - 1] * stride;
      const double* db = dist.data() + path[b - 1] * stride;
      double best = kInf;
      for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) {
          if (u != v) best = std::min(best, (da[u] + db[v]) + cost(u, v));
        }
      }
      out.at(a, b) = best;
    }
  }
  return out;
}

}  // namespace doap
