#include "doap/exact.hpp"

#include <algorithm>
#include <stdexcept>

#include "doap/decision.hpp"

namespace doap {

namespace {

constexpr std::size_t kParallelGrain = 4096;

double pair_value(const PathInstance& inst, Index i, Index j) {
  return inst.omega(i) + inst.d(i, j) + inst.omega(j);
}

// Largest of `values` that is <= D*, or -inf. O(log |values|) probes.
double largest_at_most_optimum(std::vector<double> values, Probe& probe) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::size_t lo = 0, hi = values.size();  // values[0, lo) are known <= D*
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (probe.at_most_optimum(values[mid])) lo = mid + 1;
    else hi = mid;
  }
  return lo > 0 ? values[lo - 1] : -kInf;
}

// Shrinks [a_i, b_i] around the boundary of P_i(j) := value(i,j) <= D*.
// upward: P_i holds from the target on; otherwise up to the target.
// Stops once every interval has width <= 1.
template <class Value>
void narrow(std::vector<Index>& a, std::vector<Index>& b, const std::vector<Index>& active, bool upward,
            const Value& value, Probe& probe, Exec exec) {
  std::vector<Index> X;
  for (Index i : active) {
    if (b[i] >= a[i] + 2) X.push_back(i);
  }
  std::vector<Index> m;
  std::vector<double> val;
  std::vector<std::pair<double, double>> items;
  while (!X.empty()) {
    const auto count = static_cast<std::ptrdiff_t>(X.size());
    m.resize(X.size());
    val.resize(X.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel && X.size() >= kParallelGrain)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
      const Index i = X[t];
      m[t] = a[i] + (b[i] - a[i]) / 2;
      val[t] = value(i, m[t]);
    }
    items.clear();
    for (std::ptrdiff_t t = 0; t < count; ++t) items.emplace_back(val[t], static_cast<double>(b[X[t]] - a[X[t]]));
    const double pivot = weighted_median(items);
    const bool below = probe.optimum_below(pivot);

    for (std::ptrdiff_t t = 0; t < count; ++t) {
      const Index i = X[t];
      if (below && val[t] >= pivot) {  // value(i, m) > D*
        (upward ? a[i] : b[i]) = m[t];
      } else if (!below && val[t] <= pivot) {  // value(i, m) <= D*
        (upward ? b[i] : a[i]) = m[t];
      }
    }
    std::erase_if(X, [&](Index i) { return b[i] < a[i] + 2; });
  }
}

}  // namespace

double weighted_median(std::vector<std::pair<double, double>> items) {
  if (items.empty()) throw std::invalid_argument("weighted median of an empty set");
  double total = 0.0;
  for (const auto& [v, w] : items) {
    if (!(w > 0.0)) throw std::invalid_argument("weighted median needs positive weights");
    total += w;
  }
  double need = total / 2.0;
  auto first = items.begin();
  auto last = items.end();
  while (true) {
    auto mid = first + (last - first) / 2;
    std::nth_element(first, mid, last, [](const auto& x, const auto& y) { return x.first < y.first; });
    const double pivot = mid->first;
    auto less_end = std::partition(first, last, [pivot](const auto& x) { return x.first < pivot; });
    auto equal_end = std::partition(less_end, last, [pivot](const auto& x) { return x.first == pivot; });
    double w_less = 0.0, w_equal = 0.0;
    for (auto it = first; it != less_end; ++it) w_less += it->second;
    for (auto it = less_end; it != equal_end; ++it) w_equal += it->second;
    if (w_less >= need) {
      last = less_end;
    } else if (w_less + w_equal >= need) {
      return pivot;
    } else {
      need -= w_less + w_equal;
      first = equal_end;
    }
  }
}

bool Probe::optimum_below(double lambda) {
  ++calls_;
  return feasible(*inst_, lambda, Bound::exclusive).has_value();
}

Precomputed precompute_indices(const PathInstance& inst, Probe& probe, Exec exec) {
  const Index N = inst.size();
  Precomputed pre;
  pre.r.assign(N + 1, N);

  Index lo = 1, hi = N;
  while (lo < hi) {
    const Index mid = lo + (hi - lo) / 2;
    if (probe.at_most_optimum(inst.omega(mid) + inst.to_end(mid))) hi = mid;
    else lo = mid + 1;
  }
  pre.ell_n = lo;
  if (pre.ell_n == 1) {
    pre.degenerate = true;
    return pre;
  }

  std::vector<double> adjacent;
  adjacent.reserve(pre.ell_n);
  for (Index i = 1; i < pre.ell_n; ++i) adjacent.push_back(pair_value(inst, i, i + 1));
  const double adj_cut = largest_at_most_optimum(adjacent, probe);

  std::vector<Index> a(N + 1, 0), b(N + 1, 0), active;
  for (Index i = 1; i < pre.ell_n; ++i) {
    if (pair_value(inst, i, i + 1) > adj_cut) {
      pre.r[i] = i;
    } else {
      a[i] = i + 1;
      b[i] = N;
      active.push_back(i);
    }
  }
  auto value = [&](Index i, Index j) { return pair_value(inst, i, j); };
  narrow(a, b, active, false, value, probe, exec);

  std::vector<double> upsilon;
  for (Index i : active) {
    upsilon.push_back(value(i, a[i]));
    upsilon.push_back(value(i, b[i]));
  }
  const double cut = largest_at_most_optimum(std::move(upsilon), probe);
  for (Index i : active) pre.r[i] = value(i, b[i]) <= cut ? b[i] : a[i];
  return pre;
}

double reduction_value(const PathInstance& inst, Index ell_n, Index i, Index j) {
  const double c = inst.cost(i, j);
  const double u = (inst.from_start(i) + inst.to_end(j)) + c;
  const double tail = ell_n > 1 ? inst.omega(ell_n - 1) : 0.0;
  const double e_bar = (inst.to_end(j) + inst.d(i, ell_n - 1) + tail) + c;
  return std::max(u, e_bar);
}

std::vector<Index> reduce_candidates(const PathInstance& inst, const Precomputed& pre, Probe& probe, Exec exec) {
  const Index N = inst.size();
  std::vector<Index> a(N + 1, 0), b(N + 1, 0), active;
  for (Index i = 1; i < N; ++i) {
    a[i] = i + 1;
    b[i] = N;
    active.push_back(i);
  }
  auto f = [&](Index i, Index j) { return reduction_value(inst, pre.ell_n, i, j); };
  narrow(a, b, active, true, f, probe, exec);

  std::vector<double> upsilon;
  for (Index i : active) {
    upsilon.push_back(f(i, a[i]));
    upsilon.push_back(f(i, b[i]));
  }
  const double cut = largest_at_most_optimum(std::move(upsilon), probe);
  std::vector<Index> psi(N + 1, 0);
  for (Index i : active) {
    if (f(i, a[i]) <= cut) psi[i] = a[i];
    else if (f(i, b[i]) <= cut) psi[i] = b[i];
  }
  return psi;
}

std::vector<Line> cycle_lines(const PathInstance& inst, const Precomputed& pre) {
  std::vector<Line> lines;
  for (Index k = 1; k < pre.ell_n; ++k) {
    const Index r = pre.r[k];
    if (r >= inst.size()) continue;
    lines.push_back({0.0, inst.omega(k) + inst.d(k, r) + inst.omega(r)});
    lines.push_back({1.0, inst.omega(k) - inst.d(k, r + 1) + inst.omega(r + 1)});
  }
  return lines;
}

Selection select_best(const PathInstance& inst, const Precomputed& pre, std::span<const Index> psi, Exec exec) {
  const Index N = inst.size();
  const auto lines = cycle_lines(inst, pre);
  Envelope env;
  if (!lines.empty()) env = Envelope::build(lines);

  Selection sel;
  sel.x.assign(N + 1, 0.0);
  sel.eta.assign(N + 1, kInf);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel && static_cast<std::size_t>(N) >= kParallelGrain)
  for (Index i = 1; i < N; ++i) {
    const Index j = psi[i];
    if (j == 0) continue;
    const auto use = eval_use(inst, i, j);
    sel.x[i] = inst.d(i, j) + inst.cost(i, j);
    const double cyc = lines.empty() ? -kInf : env.query(sel.x[i]);
    sel.eta[i] = std::max({use.U, use.S, use.E, cyc});
  }
  for (Index i = 1; i < N; ++i) {
    if (psi[i] != 0 && (sel.alpha == 0 || sel.eta[i] < sel.eta[sel.alpha])) sel.alpha = i;
  }
  return sel;
}

ExactRun solve_exact_traced(const PathInstance& inst, Exec exec) {
  ExactRun run;
  Probe probe(inst);
  run.pre = precompute_indices(inst, probe, exec);
  if (run.pre.degenerate) {
    run.solution = {1, 2, inst.raw_cost(1, 2), eval_d(inst, 1, 2)};
    run.probes = probe.calls();
    return run;
  }
  run.psi = reduce_candidates(inst, run.pre, probe, exec);
  run.selection = select_best(inst, run.pre, run.psi, exec);
  const Index i = run.selection.alpha;
  if (i == 0) throw InvariantError("no candidate shortcut survived the reduction");
  const Index j = run.psi[i];
  run.solution = {i, j, inst.raw_cost(i, j), eval_d(inst, i, j)};
  run.probes = probe.calls();
  return run;
}

Solution solve_exact(const PathInstance& inst, Exec exec) { return solve_exact_traced(inst, exec).solution; }

}  // namespace doap
