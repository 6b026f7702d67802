#pragma once

#include <span>
#include <vector>

#include "doap/common.hpp"

namespace doap {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double weight = 0.0;
};

/// Edge-weighted tree on vertices 1..n, stored as a CSR adjacency.
/// Immutable once built; construct through build_tree().
class Tree {
 public:
  struct Arc {
    Vertex to;
    double weight;
  };

  Vertex vertex_count() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Arc> neighbors(Vertex v) const {
    return {arcs_.data() + offset_[v], arcs_.data() + offset_[v + 1]};
  }

  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }

  /// Weight of edge (u,v), or a negative value when u and v are not adjacent.
  double edge_weight(Vertex u, Vertex v) const;

 private:
  friend Tree build_tree(Vertex n, std::vector<Edge> edges);

  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offset_;  // size n+2, offset_[v]..offset_[v+1]
  std::vector<Arc> arcs_;
};

/// Validates and builds a tree. Throws InputError for anything that is not a
/// tree on 1..n with strictly positive finite weights.
Tree build_tree(Vertex n, std::vector<Edge> edges);

/// Distances from `root` to every vertex (index 0 unused).
std::vector<double> tree_distances_from(const Tree& tree, Vertex root);

/// Full distance matrix, row-major (n+1)x(n+1) with row/column 0 unused.
std::vector<double> all_pairs_distances(const Tree& tree, Exec exec = Exec::parallel);

/// Vertex sequence of a diametral path, found by two farthest-vertex sweeps
/// (the first from vertex 1). Ties go to the smallest vertex id.
std::vector<Vertex> diametral_path(const Tree& tree);

/// The diametral path together with what hangs off it.
struct TreeDecomposition {
  std::vector<Vertex> path;         // v_1..v_N stored at [0..N-1]
  std::vector<double> delta;        // delta[k] = weight(v_{k+1}, v_{k+2}), size N-1
  std::vector<double> hang_weight;  // w(v_i) at [i], 1-based, size N+1
  std::vector<Index> subtree_of;    // tree vertex -> path index, size n+1
  std::vector<double> hang_depth;   // tree vertex -> d(v, v_{subtree_of(v)})

  Index path_length() const noexcept { return static_cast<Index>(path.size()); }
};

/// Splits the tree along `path`: every vertex gets the path index of the
/// hanging subtree containing it, and w(v_i) is the eccentricity of v_i
/// inside that subtree. Throws InputError if `path` is not a simple path.
TreeDecomposition hanging_weights(const Tree& tree, std::span<const Vertex> path);

/// diametral_path followed by hanging_weights.
TreeDecomposition decompose(const Tree& tree);

}  // namespace doap
