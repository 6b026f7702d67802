#pragma once

#include <cmath>
#include <memory>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "doap/common.hpp"
#include "doap/tree.hpp"

namespace doap {

enum class CostClass { general, graph_metric, metric };

/// Constant-time shortcut cost c(u,v) over vertices 1..n.
///
/// Copies share the payload, so handing an oracle to several solvers is
/// cheap. c(u,u) is defined as 0 and never consulted by the solvers.
class CostOracle {
 public:
  enum class Kind { matrix, euclidean, tree_distance, constant };

  /// `values` is n*n row-major, row/column k holding vertex k+1. Must be
  /// symmetric, finite and nonnegative off the diagonal.
  static CostOracle matrix(Vertex n, std::vector<double> values, CostClass declared = CostClass::general);
  /// One point per vertex (all of the same dimension); c = Euclidean distance.
  static CostOracle euclidean(const std::vector<std::vector<double>>& points,
                              CostClass declared = CostClass::metric);
  /// c(u,v) = d_T(u,v), answered in O(1) through an Euler-tour LCA table.
  static CostOracle tree_distance(const Tree& tree);
  static CostOracle constant(Vertex n, double value);
  /// Upper triangle including the diagonal, row by row: (1,1..n), (2,2..n), ...
  /// Reports kind `matrix`.
  static CostOracle triangular(Vertex n, std::vector<double> packed, CostClass declared = CostClass::general);

  Kind kind() const noexcept { return kind_; }
  CostClass declared_class() const noexcept { return declared_; }
  Vertex vertex_count() const noexcept { return n_; }

  double operator()(Vertex u, Vertex v) const {
    if (u == v) return 0.0;
    return std::visit([u, v](const auto& p) { return p.eval(u, v); }, *payload_);
  }

 private:
  struct Dense {
    Vertex n;
    std::vector<double> values;
    double eval(Vertex u, Vertex v) const {
      return values[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v - 1)];
    }
  };
  struct Packed {
    Vertex n;
    std::vector<double> values;
    double eval(Vertex u, Vertex v) const {
      if (u > v) std::swap(u, v);
      const auto a = static_cast<std::size_t>(u - 1);
      const auto row = a * static_cast<std::size_t>(n) - a * (a - 1) / 2;
      return values[row + static_cast<std::size_t>(v - u)];
    }
  };
  struct Points {
    std::size_t dim;
    std::vector<double> coords;  // vertex k at [(k-1)*dim, k*dim)
    double eval(Vertex u, Vertex v) const {
      const double* a = coords.data() + static_cast<std::size_t>(u - 1) * dim;
      const double* b = coords.data() + static_cast<std::size_t>(v - 1) * dim;
      double s = 0.0;
      for (std::size_t k = 0; k < dim; ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
      return std::sqrt(s);
    }
  };
  struct TreeMetric {
    std::vector<double> depth;      // distance from vertex 1
    std::vector<std::int32_t> first;  // first Euler position per vertex
    std::vector<std::int32_t> level;  // log2 lookup
    std::vector<std::vector<Vertex>> sparse;  // argmin-depth vertex per range
    std::vector<std::int32_t> hops;   // unweighted depth for LCA comparison
    double eval(Vertex u, Vertex v) const;
  };
  struct Uniform {
    double value;
    double eval(Vertex, Vertex) const { return value; }
  };
  using Payload = std::variant<Dense, Packed, Points, TreeMetric, Uniform>;

  CostOracle(Kind kind, CostClass declared, Vertex n, std::shared_ptr<const Payload> payload)
      : kind_(kind), declared_(declared), n_(n), payload_(std::move(payload)) {}

  Kind kind_;
  CostClass declared_;
  Vertex n_;
  std::shared_ptr<const Payload> payload_;
};

/// Exhaustive graph-triangle check c(u,v) <= c(u,z) + d(z,v) over ordered
/// triples of distinct vertices. O(n^3); meant for n up to a few hundred.
/// `tolerance` is relative to the right-hand side (0 for exact data).
bool check_graph_metric(const Tree& tree, const CostOracle& cost, double tolerance = 0.0);

}  // namespace doap
