#include "doap/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace doap {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// Iterative DFS from root; fills dist and parent (parent[root] = 0).
void sweep(const Tree& tree, Vertex root, std::vector<double>& dist, std::vector<Vertex>& parent) {
  const Vertex n = tree.vertex_count();
  dist.assign(n + 1, kInf);
  parent.assign(n + 1, 0);
  std::vector<Vertex> stack{root};
  dist[root] = 0.0;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const auto& arc : tree.neighbors(x)) {
      if (arc.to == parent[x]) continue;
      parent[arc.to] = x;
      dist[arc.to] = dist[x] + arc.weight;
      stack.push_back(arc.to);
    }
  }
}

Vertex farthest(const std::vector<double>& dist) {
  Vertex best = 1;
  for (Vertex v = 2; v < static_cast<Vertex>(dist.size()); ++v) {
    if (dist[v] > dist[best]) best = v;
  }
  return best;
}

}  // namespace

double Tree::edge_weight(Vertex u, Vertex v) const {
  for (const auto& arc : neighbors(u)) {
    if (arc.to == v) return arc.weight;
  }
  return -1.0;
}

Tree build_tree(Vertex n, std::vector<Edge> edges) {
  using Code = InputError::Code;
  if (n < 2) throw InputError(Code::too_few_vertices, "a tree needs at least 2 vertices");
  if (edges.size() != static_cast<std::size_t>(n - 1)) {
    throw InputError(Code::wrong_edge_count, "expected " + std::to_string(n - 1) + " edges, got " +
                                                 std::to_string(edges.size()));
  }

  DisjointSets sets(static_cast<std::size_t>(n) + 1);
  for (const auto& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw InputError(Code::vertex_out_of_range, "edge " + edge_text(e) + " has a vertex outside 1.." +
                                                      std::to_string(n));
    }
    if (e.u == e.v) throw InputError(Code::self_loop, "self-loop at vertex " + std::to_string(e.u));
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw InputError(Code::bad_weight, "edge " + edge_text(e) + " must have a positive finite weight");
    }
    if (!sets.unite(e.u, e.v)) {
      throw InputError(Code::cycle, "edge " + edge_text(e) + " closes a cycle: not a tree");
    }
  }
  // n-1 edges and no cycle: connected.

  Tree tree;
  tree.n_ = n;
  tree.offset_.assign(static_cast<std::size_t>(n) + 2, 0);
  for (const auto& e : edges) {
    ++tree.offset_[e.u + 1];
    ++tree.offset_[e.v + 1];
  }
  std::partial_sum(tree.offset_.begin(), tree.offset_.end(), tree.offset_.begin());
  tree.arcs_.resize(2 * edges.size());
  std::vector<std::size_t> fill(tree.offset_.begin(), tree.offset_.end() - 1);
  for (const auto& e : edges) {
    tree.arcs_[fill[e.u]++] = {e.v, e.weight};
    tree.arcs_[fill[e.v]++] = {e.u, e.weight};
  }
  tree.edges_ = std::move(edges);
  return tree;
}

std::vector<double> tree_distances_from(const Tree& tree, Vertex root) {
  if (!tree.contains(root)) {
    throw InputError(InputError::Code::vertex_out_of_range, "vertex " + std::to_string(root) + " is not in the tree");
  }
  std::vector<double> dist;
  std::vector<Vertex> parent;
  sweep(tree, root, dist, parent);
  return dist;
}

std::vector<double> all_pairs_distances(const Tree& tree, Exec exec) {
  const Vertex n = tree.vertex_count();
  const std::size_t stride = static_cast<std::size_t>(n) + 1;
  std::vector<double> table(stride * stride, 0.0);
#pragma omp parallel for schedule(dynamic, 8) if (exec == Exec::parallel)
  for (Vertex s = 1; s <= n; ++s) {
    std::vector<double> dist;
    std::vector<Vertex> parent;
    sweep(tree, s, dist, parent);
    std::copy(dist.begin() + 1, dist.end(), table.begin() + static_cast<std::ptrdiff_t>(s * stride + 1));
  }
  return table;
}

std::vector<Vertex> diametral_path(const Tree& tree) {
  std::vector<double> dist;
  std::vector<Vertex> parent;
  sweep(tree, 1, dist, parent);
  const Vertex a = farthest(dist);
  sweep(tree, a, dist, parent);
  const Vertex b = farthest(dist);

  std::vector<Vertex> path;
  for (Vertex x = b; x != 0; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());  // a .. b
  if (path.front() > path.back()) std::reverse(path.begin(), path.end());
  return path;
}

TreeDecomposition hanging_weights(const Tree& tree, std::span<const Vertex> path) {
  using Code = InputError::Code;
  const Vertex n = tree.vertex_count();
  const auto N = static_cast<Index>(path.size());
  if (N < 2) throw InputError(Code::not_a_path, "a path needs at least two vertices");

  TreeDecomposition dec;
  dec.path.assign(path.begin(), path.end());
  dec.delta.resize(N - 1);
  dec.hang_weight.assign(N + 1, 0.0);
  dec.subtree_of.assign(n + 1, 0);
  dec.hang_depth.assign(n + 1, 0.0);

  for (Index i = 1; i <= N; ++i) {
    const Vertex v = path[i - 1];
    if (!tree.contains(v)) throw InputError(Code::not_a_path, "path vertex " + std::to_string(v) + " out of range");
    if (dec.subtree_of[v] != 0) throw InputError(Code::not_a_path, "path repeats vertex " + std::to_string(v));
    dec.subtree_of[v] = i;
    if (i < N) {
      const double w = tree.edge_weight(v, path[i]);
      if (w < 0.0) {
        throw InputError(Code::not_a_path,
                         std::to_string(v) + " and " + std::to_string(path[i]) + " are not adjacent");
      }
      dec.delta[i - 1] = w;
    }
  }

  // Grow each hanging subtree from its path vertex without crossing the path.
  std::vector<Vertex> stack;
  for (Index i = 1; i <= N; ++i) {
    const Vertex root = path[i - 1];
    stack.assign(1, root);
    double ecc = 0.0;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const auto& arc : tree.neighbors(x)) {
        if (dec.subtree_of[arc.to] != 0) continue;
        dec.subtree_of[arc.to] = i;
        dec.hang_depth[arc.to] = dec.hang_depth[x] + arc.weight;
        ecc = std::max(ecc, dec.hang_depth[arc.to]);
        stack.push_back(arc.to);
      }
    }
    dec.hang_weight[i] = ecc;
  }
  return dec;
}

TreeDecomposition decompose(const Tree& tree) {
  const auto path = diametral_path(tree);
  return hanging_weights(tree, path);
}

}  // namespace doap
