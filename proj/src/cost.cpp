#include "doap/cost.hpp"

#include <algorithm>
#include <string>

namespace doap {

namespace {

void require_cost(bool ok, const std::string& what) {
  if (!ok) throw InputError(InputError::Code::bad_cost, what);
}

}  // namespace

CostOracle CostOracle::matrix(Vertex n, std::vector<double> values, CostClass declared) {
  require_cost(n >= 1, "cost matrix needs at least one vertex");
  const auto sn = static_cast<std::size_t>(n);
  require_cost(values.size() == sn * sn, "cost matrix must have n*n entries");
  for (std::size_t a = 0; a < sn; ++a) {
    values[a * sn + a] = 0.0;
    for (std::size_t b = a + 1; b < sn; ++b) {
      const double x = values[a * sn + b];
      require_cost(std::isfinite(x) && x >= 0.0,
                   "cost matrix entry (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                       ") must be finite and nonnegative");
      require_cost(x == values[b * sn + a], "cost matrix is not symmetric at (" + std::to_string(a + 1) + "," +
                                                std::to_string(b + 1) + ")");
    }
  }
  auto payload = std::make_shared<const Payload>(Dense{n, std::move(values)});
  return CostOracle(Kind::matrix, declared, n, std::move(payload));
}

CostOracle CostOracle::triangular(Vertex n, std::vector<double> packed, CostClass declared) {
  require_cost(n >= 1, "cost table needs at least one vertex");
  const auto sn = static_cast<std::size_t>(n);
  require_cost(packed.size() == sn * (sn + 1) / 2, "packed cost table must have n(n+1)/2 entries");
  for (double x : packed) require_cost(std::isfinite(x) && x >= 0.0, "cost table entries must be finite and nonnegative");
  return CostOracle(Kind::matrix, declared, n, std::make_shared<const Payload>(Packed{n, std::move(packed)}));
}

CostOracle CostOracle::euclidean(const std::vector<std::vector<double>>& points, CostClass declared) {
  require_cost(!points.empty(), "coordinate list is empty");
  const std::size_t dim = points.front().size();
  require_cost(dim >= 1, "points need at least one coordinate");
  Points p{dim, {}};
  p.coords.reserve(points.size() * dim);
  for (const auto& pt : points) {
    require_cost(pt.size() == dim, "all points must have the same dimension");
    for (double x : pt) {
      require_cost(std::isfinite(x), "coordinates must be finite");
      p.coords.push_back(x);
    }
  }
  const auto n = static_cast<Vertex>(points.size());
  return CostOracle(Kind::euclidean, declared, n, std::make_shared<const Payload>(std::move(p)));
}

CostOracle CostOracle::constant(Vertex n, double value) {
  require_cost(n >= 1, "constant cost needs at least one vertex");
  require_cost(std::isfinite(value) && value >= 0.0, "constant cost must be finite and nonnegative");
  // K <= K + d(z,v) for any positive d: always graph-metric.
  return CostOracle(Kind::constant, CostClass::graph_metric, n, std::make_shared<const Payload>(Uniform{value}));
}

CostOracle CostOracle::tree_distance(const Tree& tree) {
  const Vertex n = tree.vertex_count();
  TreeMetric m;
  m.depth.assign(n + 1, 0.0);
  m.hops.assign(n + 1, 0);
  m.first.assign(n + 1, -1);

  // Euler tour from vertex 1, iterative.
  std::vector<Vertex> euler;
  euler.reserve(2 * static_cast<std::size_t>(n));
  std::vector<Vertex> parent(n + 1, 0);
  std::vector<std::size_t> next(n + 1, 0);
  std::vector<Vertex> stack{1};
  while (!stack.empty()) {
    const Vertex x = stack.back();
    if (m.first[x] < 0) m.first[x] = static_cast<std::int32_t>(euler.size());
    euler.push_back(x);
    const auto nb = tree.neighbors(x);
    bool descended = false;
    while (next[x] < nb.size()) {
      const auto& arc = nb[next[x]++];
      if (arc.to == parent[x]) continue;
      parent[arc.to] = x;
      m.depth[arc.to] = m.depth[x] + arc.weight;
      m.hops[arc.to] = m.hops[x] + 1;
      stack.push_back(arc.to);
      descended = true;
      break;
    }
    // the parent is re-emitted when it reaches the top of the stack again
    if (!descended) stack.pop_back();
  }

  const std::size_t len = euler.size();
  m.level.assign(len + 1, 0);
  for (std::size_t k = 2; k <= len; ++k) m.level[k] = m.level[k / 2] + 1;
  m.sparse.push_back(euler);
  for (std::size_t span = 1; 2 * span <= len; span *= 2) {
    const auto& prev = m.sparse.back();
    std::vector<Vertex> row(len - 2 * span + 1);
    for (std::size_t k = 0; k < row.size(); ++k) {
      const Vertex a = prev[k];
      const Vertex b = prev[k + span];
      row[k] = m.hops[a] <= m.hops[b] ? a : b;
    }
    m.sparse.push_back(std::move(row));
  }
  return CostOracle(Kind::tree_distance, CostClass::metric, n, std::make_shared<const Payload>(std::move(m)));
}

double CostOracle::TreeMetric::eval(Vertex u, Vertex v) const {
  std::int32_t a = first[u];
  std::int32_t b = first[v];
  if (a > b) std::swap(a, b);
  const std::int32_t k = level[static_cast<std::size_t>(b - a + 1)];
  const Vertex x = sparse[k][a];
  const Vertex y = sparse[k][b - (1 << k) + 1];
  const Vertex lca = hops[x] <= hops[y] ? x : y;
  return (depth[u] + depth[v]) - 2.0 * depth[lca];
}

bool check_graph_metric(const Tree& tree, const CostOracle& cost, double tolerance) {
  const Vertex n = tree.vertex_count();
  const auto d = all_pairs_distances(tree);
  const std::size_t stride = static_cast<std::size_t>(n) + 1;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (v == u) continue;
      const double cuv = cost(u, v);
      for (Vertex z = 1; z <= n; ++z) {
        if (z == u || z == v) continue;
        const double rhs = cost(u, z) + d[z * stride + v];
        if (cuv > rhs + tolerance * std::max(1.0, rhs)) return false;
      }
    }
  }
  return true;
}

}  // namespace doap
