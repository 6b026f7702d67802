#include "doap/path_instance.hpp"

#include <algorithm>
#include <string>

namespace doap {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(InputError::Code::bad_instance, what);
}

}  // namespace

PathInstance::PathInstance(std::vector<double> delta, std::vector<double> w, CostOracle cost,
                           std::vector<Vertex> vertex_of)
    : n_(static_cast<Index>(w.size())), cost_(std::move(cost)) {
  require(n_ >= 2, "a path instance needs at least two vertices");
  require(delta.size() + 1 == w.size(), "need exactly N-1 edge weights for N node weights");

  prefix_.assign(n_ + 1, 0.0);
  for (Index i = 1; i < n_; ++i) {
    const double step = delta[i - 1];
    require(step > 0.0 && std::isfinite(step), "path edge weights must be positive and finite");
    prefix_[i + 1] = prefix_[i] + step;
  }

  w_.assign(n_ + 1, 0.0);
  for (Index i = 1; i <= n_; ++i) {
    const double wi = w[i - 1];
    require(std::isfinite(wi) && wi >= 0.0, "node weight w(" + std::to_string(i) + ") must be nonnegative");
    require(wi <= std::min(from_start(i), to_end(i)),
            "node weight w(" + std::to_string(i) + ") exceeds min(d(1,i), d(i,N))");
    w_[i] = wi;
  }
  require(w_[1] == 0.0 && w_[n_] == 0.0, "endpoint node weights must be 0");

  const auto om = relaxed_weights(delta, w);
  omega_.assign(n_ + 1, 0.0);
  std::copy(om.begin(), om.end(), omega_.begin() + 1);

  vertex_.assign(n_ + 1, 0);
  if (vertex_of.empty()) {
    for (Index i = 1; i <= n_; ++i) vertex_[i] = i;
  } else {
    require(vertex_of.size() == w.size(), "vertex map must have one entry per path position");
    std::copy(vertex_of.begin(), vertex_of.end(), vertex_.begin() + 1);
  }
  for (Index i = 1; i <= n_; ++i) {
    require(vertex_[i] >= 1 && vertex_[i] <= cost_.vertex_count(), "path vertex outside the cost oracle's range");
  }
}

PathInstance induce_instance(const Tree& tree, const TreeDecomposition& dec, const CostOracle& cost) {
  const Index N = dec.path_length();
  if (static_cast<Index>(dec.hang_weight.size()) != N + 1 ||
      static_cast<Index>(dec.delta.size()) != N - 1 ||
      static_cast<Vertex>(dec.subtree_of.size()) != tree.vertex_count() + 1) {
    throw InputError(InputError::Code::bad_instance, "decomposition does not match the tree");
  }
  if (cost.vertex_count() < tree.vertex_count()) {
    throw InputError(InputError::Code::bad_cost, "cost oracle covers fewer vertices than the tree");
  }
  std::vector<double> w(dec.hang_weight.begin() + 1, dec.hang_weight.end());
  return PathInstance(dec.delta, std::move(w), cost, dec.path);
}

std::vector<double> relaxed_weights(std::span<const double> delta, std::span<const double> w) {
  const std::size_t n = w.size();
  std::vector<double> suffix(n);  // max over j >= i of w(j) - d(i,j)
  suffix[n - 1] = w[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) suffix[i] = std::max(w[i], suffix[i + 1] - delta[i]);
  std::vector<double> omega(n);
  omega[0] = suffix[0];
  for (std::size_t i = 1; i < n; ++i) omega[i] = std::max(suffix[i], omega[i - 1] - delta[i - 1]);
  return omega;
}

// Every route through the shortcut is evaluated as (path and node terms) + c
// with the cost added last; the brute-force evaluators follow the same rule.

EndComponents eval_use(const PathInstance& inst, Index i, Index j) {
  if (i < 1 || j > inst.size() || i >= j) {
    throw InputError(InputError::Code::vertex_out_of_range, "need 1 <= i < j <= N");
  }
  const double c = inst.cost(i, j);
  EndComponents out{};
  out.U = (inst.from_start(i) + inst.to_end(j)) + c;

  // S: h in [i, j-1]. Up to h_bar the direct path from v_1 wins.
  auto s_term = [&](Index h) {
    return std::min(inst.omega(h) + inst.from_start(h), (inst.omega(h) + inst.from_start(i) + inst.d(h, j)) + c);
  };
  Index lo = i, hi = j - 1;  // predicate holds at lo
  while (lo < hi) {
    const Index mid = lo + (hi - lo + 1) / 2;
    if (inst.from_start(mid) <= (inst.from_start(i) + inst.d(mid, j)) + c) lo = mid;
    else hi = mid - 1;
  }
  out.S = s_term(lo);
  if (lo + 1 <= j - 1) out.S = std::max(out.S, s_term(lo + 1));

  // E: k in [i+1, j]. From k_bar on the direct path to v_N wins.
  auto e_term = [&](Index k) {
    return std::min(inst.omega(k) + inst.to_end(k), (inst.omega(k) + inst.to_end(j) + inst.d(i, k)) + c);
  };
  lo = i + 1;
  hi = j;  // predicate holds at hi
  while (lo < hi) {
    const Index mid = lo + (hi - lo) / 2;
    if (inst.to_end(mid) <= (inst.to_end(j) + inst.d(i, mid)) + c) hi = mid;
    else lo = mid + 1;
  }
  out.E = e_term(hi);
  if (hi - 1 >= i + 1) out.E = std::max(out.E, e_term(hi - 1));
  return out;
}

double eval_c(const PathInstance& inst, Index i, Index j) {
  if (j - i < 3) return -kInf;
  const double c = inst.cost(i, j);
  auto pair_value = [&](Index k, Index h) {
    return std::min(inst.omega(k) + inst.d(k, h) + inst.omega(h),
                    (inst.omega(k) + inst.d(i, k) + inst.d(h, j) + inst.omega(h)) + c);
  };
  auto direct_wins = [&](Index k, Index h) { return inst.d(k, h) <= (inst.d(i, k) + inst.d(h, j)) + c; };

  double best = -kInf;
  Index h = i + 1;  // last h (> k) whose direct route from k still wins; h == k means none
  for (Index k = i + 1; k < j - 1; ++k) {
    h = std::max(h, k);
    while (h + 1 <= j - 1 && direct_wins(k, h + 1)) ++h;
    if (h > k) best = std::max(best, pair_value(k, h));
    if (h + 1 <= j - 1) best = std::max(best, pair_value(k, h + 1));
  }
  return best;
}

double eval_d(const PathInstance& inst, Index i, Index j) {
  const auto use = eval_use(inst, i, j);
  return std::max({use.U, use.S, use.E, eval_c(inst, i, j)});
}

double eval_c_brute(const PathInstance& inst, Index i, Index j) {
  const double c = inst.cost(i, j);
  double best = -kInf;
  for (Index k = i + 1; k < j; ++k) {
    for (Index h = k + 1; h < j; ++h) {
      const double direct = inst.omega(k) + inst.d(k, h) + inst.omega(h);
      const double around = (inst.omega(k) + inst.d(i, k) + inst.d(h, j) + inst.omega(h)) + c;
      best = std::max(best, std::min(direct, around));
    }
  }
  return best;
}

double eval_d_brute(const PathInstance& inst, Index i, Index j) {
  const Index N = inst.size();
  const double c = inst.cost(i, j);
  double best = -kInf;
  for (Index k = 1; k <= N; ++k) {
    for (Index h = k + 1; h <= N; ++h) {
      const double ends = inst.w(k) + inst.w(h);
      const double direct = ends + inst.d(k, h);
      const double via_ij = (ends + inst.d(k, i) + inst.d(j, h)) + c;
      const double via_ji = (ends + inst.d(k, j) + inst.d(i, h)) + c;
      best = std::max(best, std::min({direct, via_ij, via_ji}));
    }
  }
  return best;
}

}  // namespace doap
