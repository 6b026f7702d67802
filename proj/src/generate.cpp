#include "doap/generate.hpp"

#include <algorithm>
#include <cmath>

namespace doap {

namespace {

int draw(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

void check_range(Vertex n, WeightRange weights) {
  if (n < 2) throw InputError(InputError::Code::too_few_vertices, "a tree needs at least 2 vertices");
  if (weights.lo < 1 || weights.hi < weights.lo) {
    throw InputError(InputError::Code::bad_weight, "weight range must satisfy 1 <= lo <= hi");
  }
}

}  // namespace

Tree random_tree(Vertex n, WeightRange weights, Rng& rng) {
  check_range(n, weights);
  std::vector<Edge> edges;
  for (Vertex k = 2; k <= n; ++k) edges.push_back({draw(rng, 1, k - 1), k, double(draw(rng, weights.lo, weights.hi))});
  return build_tree(n, std::move(edges));
}

Tree path_tree(Vertex n, WeightRange weights, Rng& rng) {
  check_range(n, weights);
  std::vector<Edge> edges;
  for (Vertex k = 2; k <= n; ++k) edges.push_back({k - 1, k, double(draw(rng, weights.lo, weights.hi))});
  return build_tree(n, std::move(edges));
}

Tree caterpillar_tree(Vertex n, WeightRange weights, Rng& rng) {
  check_range(n, weights);
  const Vertex spine = (n + 1) / 2;
  std::vector<Edge> edges;
  for (Vertex k = 2; k <= spine; ++k) edges.push_back({k - 1, k, double(draw(rng, weights.lo, weights.hi))});
  for (Vertex k = spine + 1; k <= n; ++k) {
    edges.push_back({draw(rng, 1, spine), k, double(draw(rng, weights.lo, weights.hi))});
  }
  return build_tree(n, std::move(edges));
}

std::vector<std::vector<double>> embed_tree(const Tree& tree, int dim, Rng& rng) {
  if (dim < 1) throw InputError(InputError::Code::bad_cost, "embedding dimension must be positive");
  const Vertex n = tree.vertex_count();
  std::vector<std::vector<double>> points(n, std::vector<double>(dim, 0.0));
  std::vector<bool> seen(n + 1, false);
  std::vector<Vertex> stack{1};
  seen[1] = true;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const auto& arc : tree.neighbors(x)) {
      if (seen[arc.to]) continue;
      seen[arc.to] = true;
      // integer step of squared length <= weight^2, one axis at a time
      auto budget = static_cast<long long>(std::floor(arc.weight));
      budget *= budget;
      auto& p = points[arc.to - 1];
      p = points[x - 1];
      std::vector<int> axes(dim);
      for (int a = 0; a < dim; ++a) axes[a] = a;
      std::shuffle(axes.begin(), axes.end(), rng);
      for (int a : axes) {
        const auto reach = static_cast<int>(std::floor(std::sqrt(static_cast<double>(budget))));
        int step = draw(rng, -reach, reach);
        while (static_cast<long long>(step) * step > budget) step += step > 0 ? -1 : 1;
        budget -= static_cast<long long>(step) * step;
        p[a] += step;
      }
      stack.push_back(arc.to);
    }
  }
  return points;
}

std::vector<double> random_matrix(Vertex n, int lo, int hi, Rng& rng) {
  const auto sn = static_cast<std::size_t>(n);
  std::vector<double> values(sn * sn, 0.0);
  for (std::size_t a = 0; a < sn; ++a) {
    for (std::size_t b = a + 1; b < sn; ++b) values[a * sn + b] = values[b * sn + a] = draw(rng, lo, hi);
  }
  return values;
}

PathInstance random_path_instance(Index N, int max_edge, int max_cost, Rng& rng) {
  if (N < 2) throw InputError(InputError::Code::bad_instance, "a path instance needs at least two vertices");
  std::vector<double> delta(N - 1), prefix(N, 0.0);
  for (Index k = 0; k + 1 < N; ++k) {
    delta[k] = draw(rng, 1, max_edge);
    prefix[k + 1] = prefix[k] + delta[k];
  }
  std::vector<double> w(N, 0.0);
  for (Index k = 1; k + 1 < N; ++k) {
    const auto cap = static_cast<int>(std::min(prefix[k], prefix[N - 1] - prefix[k]));
    w[k] = draw(rng, 0, cap);
  }

  // closure over the path: c(a,b) <= c(a',b') + d(a,a') + d(b',b)
  const auto sn = static_cast<std::size_t>(N);
  auto c = random_matrix(N, 0, max_cost, rng);
  auto d = [&](std::size_t a, std::size_t b) { return std::abs(prefix[a] - prefix[b]); };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < sn; ++a) {
      for (std::size_t b = 0; b < sn; ++b) {
        if (a == b) continue;
        for (std::size_t z = 0; z < sn; ++z) {
          if (z == a) continue;
          const double via = c[a * sn + z] + d(z, b);
          if (via < c[a * sn + b]) {
            c[a * sn + b] = c[b * sn + a] = via;
            changed = true;
          }
        }
      }
    }
  }
  return PathInstance(std::move(delta), std::move(w), CostOracle::matrix(N, std::move(c), CostClass::graph_metric));
}

}  // namespace doap
