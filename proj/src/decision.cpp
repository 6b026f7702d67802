#include "doap/decision.hpp"

#include <algorithm>
#include <cmath>

namespace doap {

namespace {

template <bool Strict>
struct Within {
  double lambda;
  bool operator()(double x) const {
    if constexpr (Strict) return x < lambda;
    else return x <= lambda;
  }
};

template <bool Strict>
void run(const PathInstance& inst, DecisionState& st) {
  const Within<Strict> ok{st.lambda};
  const Index N = inst.size();
  auto& mv = st.moves;

  auto pair_value = [&](Index i, Index j) { return inst.omega(i) + inst.d(i, j) + inst.omega(j); };

  st.r.assign(N + 1, 0);
  st.r[N] = N;
  for (Index i = N - 1; i >= 1; --i) {
    Index r = st.r[i + 1];
    while (r > i && !ok(pair_value(i, r))) {
      --r;
      ++mv.r;
    }
    st.r[i] = r;
  }

  Index ell = 1;
  while (ell < N && !ok(inst.omega(ell) + inst.to_end(ell))) {
    ++ell;
    ++mv.ell_n;
  }
  st.ell_n = ell;

  auto U = [&](Index i, Index j) { return (inst.from_start(i) + inst.to_end(j)) + inst.cost(i, j); };
  st.mu.assign(N + 1, N + 1);
  Index mu = 1;
  for (Index i = 1; i < N; ++i) {
    if (mu < i + 1) {
      mv.mu += i + 1 - mu;
      mu = i + 1;
    }
    while (mu <= N && !ok(U(i, mu))) {
      ++mu;
      ++mv.mu;
    }
    st.mu[i] = mu;
  }

  const Index r1 = st.r[1];
  const double s_tail = r1 < N ? inst.omega(r1 + 1) : 0.0;
  auto S_bar = [&](Index i, Index j) {
    return (inst.from_start(i) + inst.d(r1 + 1, j) + s_tail) + inst.cost(i, j);
  };
  st.sigma.assign(N + 1, 0);
  Index sigma = N;
  for (Index i = 1; i <= N; ++i) {
    sigma = std::max(sigma, i);
    while (sigma > i && !ok(S_bar(i, sigma))) {
      --sigma;
      ++mv.sigma;
    }
    st.sigma[i] = sigma;
  }

  const double e_tail = ell > 1 ? inst.omega(ell - 1) : 0.0;
  auto E_bar = [&](Index i, Index j) {
    return (inst.to_end(j) + inst.d(i, ell - 1) + e_tail) + inst.cost(i, j);
  };
  st.theta.assign(N + 2, 0);
  Index theta = 1;  // virtual theta_{N+1}
  for (Index j = N; j >= 1; --j) {
    theta = std::min(theta, j);
    while (theta < j && !ok(E_bar(theta, j))) {
      ++theta;
      ++mv.theta;
    }
    st.theta[j] = theta;
  }

  // rho_i = max(mu_i, g_i) where g_i = min{j > i : theta_j <= i}; the set is
  // an upward-closed range of j, so g only drifts down (plus one per step).
  st.rho.assign(N + 1, 0);
  Index g = N + 1;
  for (Index i = 1; i < N; ++i) {
    if (g < i + 1) {
      mv.rho += i + 1 - g;
      g = i + 1;
    }
    while (g - 1 > i && st.theta[g - 1] <= i) {
      --g;
      ++mv.rho;
    }
    const Index rho = std::max(st.mu[i], g);
    if (rho <= N && rho <= st.sigma[i] && st.theta[rho] <= i && i <= r1 && rho >= ell) st.rho[i] = rho;
  }

  for (Index k = 1; k < N; ++k) {
    const Index h = st.r[k];
    if (h < N) st.kappa_max = std::max(st.kappa_max, inst.omega(k) + inst.omega(h + 1) - inst.d(k, h + 1));
  }
  st.delta_min = st.kappa_max == -kInf ? kInf : st.lambda - st.kappa_max;

  for (Index i = 1; i < N; ++i) {
    const Index j = st.rho[i];
    if (j == 0) continue;
    if (st.kappa_max == -kInf || ok((inst.d(i, j) + st.kappa_max) + inst.cost(i, j))) {
      st.answer = std::pair{i, j};
      return;
    }
  }
}

}  // namespace

DecisionState decision_state(const PathInstance& inst, double lambda, Bound bound) {
  if (std::isnan(lambda)) throw InputError(InputError::Code::parse, "lambda must be a number");
  DecisionState st;
  st.lambda = lambda;
  st.bound = bound;
  if (bound == Bound::exclusive) run<true>(inst, st);
  else run<false>(inst, st);
  return st;
}

std::optional<std::pair<Index, Index>> feasible(const PathInstance& inst, double lambda, Bound bound) {
  if (std::isnan(lambda)) throw InputError(InputError::Code::parse, "lambda must be a number");
  const bool whole = bound == Bound::exclusive ? inst.length() < lambda : inst.length() <= lambda;
  if (whole) return std::pair<Index, Index>{1, 2};
  return decision_state(inst, lambda, bound).answer;
}

}  // namespace doap
