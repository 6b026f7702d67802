#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "doap/exact.hpp"
#include "doap/oracle.hpp"
#include "support.hpp"

using namespace doap;
using namespace testing_support;

namespace {

// Random instance: half induced from trees, half direct path instances.
PathInstance random_instance(Rng& rng, Index max_n) {
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    const Tree t = any_tree(std::uniform_int_distribution<Vertex>(2, max_n)(rng), rng);
    return induce_instance(t, decompose(t), metric_cost_for(t, rng));
  }
  return random_path_instance(std::uniform_int_distribution<Index>(2, max_n)(rng), 20, 80, rng);
}

}  // namespace

TEST_CASE("weighted median") {
  CHECK(weighted_median({{1, 1}, {2, 1}, {3, 1}}) == 2);
  CHECK(weighted_median({{1, 1}, {5, 3}}) == 5);
  CHECK(weighted_median({{7, 2}}) == 7);
  CHECK(weighted_median({{3, 1}, {1, 1}}) == 1);
  CHECK_THROWS_AS(weighted_median({}), std::invalid_argument);
  CHECK_THROWS_AS(weighted_median({{1, 0}}), std::invalid_argument);

  Rng rng(101);
  for (int rep = 0; rep < 300; ++rep) {
    std::vector<std::pair<double, double>> items(std::uniform_int_distribution<int>(1, 40)(rng));
    for (auto& [v, w] : items) {
      v = std::uniform_int_distribution<int>(0, 15)(rng);
      w = std::uniform_int_distribution<int>(1, 9)(rng);
    }
    auto sorted = items;
    std::sort(sorted.begin(), sorted.end());
    double total = 0;
    for (const auto& it : items) total += it.second;
    double run = 0, want = 0;
    for (const auto& [v, w] : sorted) {
      run += w;
      if (run >= total / 2) {
        want = v;
        break;
      }
    }
    CHECK(weighted_median(items) == want);
  }
}

TEST_CASE("exact solver on the unit five-path") {
  const auto p = p5_unit_cost();
  const auto run = solve_exact_traced(p);
  CHECK(run.solution.u == 1);
  CHECK(run.solution.v == 5);
  CHECK(run.solution.diameter == 2);
  CHECK(run.pre.ell_n == 3);
  CHECK(run.pre.r[1] == 3);
  CHECK(run.psi[1] == 5);
}

TEST_CASE("useless shortcuts keep the path length") {
  Rng rng(111);
  const Tree t = path_tree(9, {1, 9}, rng);
  const auto p = induce_instance(t, decompose(t), CostOracle::tree_distance(t));
  const auto s = solve_exact(p);
  CHECK(s.u == 1);
  CHECK(s.v == 2);
  CHECK(s.diameter == p.length());

  const PathInstance big({3, 4}, {0, 1, 0}, CostOracle::constant(3, 50));
  const auto b = solve_exact(big);
  CHECK(b.u == 1);
  CHECK(b.v == 2);
  CHECK(b.diameter == 7);
}

TEST_CASE("two-vertex instances") {
  const PathInstance cheap({9}, {0, 0}, CostOracle::constant(2, 4));
  const auto s = solve_exact(cheap);
  CHECK(s.u == 1);
  CHECK(s.v == 2);
  CHECK(s.diameter == 4);
  const PathInstance dear({3}, {0, 0}, CostOracle::constant(2, 4));
  CHECK(solve_exact(dear).diameter == 3);
}

TEST_CASE("exact solver matches brute force") {
  Rng rng(121);
  for (int rep = 0; rep < 500; ++rep) {
    const auto p = random_instance(rng, 40);
    const auto want = wdoap_brute(p);
    const auto got = solve_exact(p);
    REQUIRE(got.diameter == want.diameter);
    CHECK(got.u < got.v);
    CHECK(eval_d_brute(p, got.u, got.v) == got.diameter);
    CHECK(got.shortcut_cost == p.raw_cost(got.u, got.v));
  }
}

TEST_CASE("serial and parallel runs agree") {
  Rng rng(122);
  for (int rep = 0; rep < 50; ++rep) {
    const auto p = random_instance(rng, 60);
    const auto a = solve_exact(p, Exec::serial);
    const auto b = solve_exact(p, Exec::parallel);
    CHECK(a.u == b.u);
    CHECK(a.v == b.v);
    CHECK(a.diameter == b.diameter);
  }
}

TEST_CASE("precomputed indices and candidates follow their definitions") {
  Rng rng(131);
  for (int rep = 0; rep < 150; ++rep) {
    const auto p = random_instance(rng, 35);
    const Index N = p.size();
    const double optimum = wdoap_brute(p).diameter;
    const auto run = solve_exact_traced(p);
    CHECK(run.probes <= static_cast<std::int64_t>(40 * std::max(1.0, std::log2(N))));
    if (run.pre.degenerate) {
      CHECK(optimum == p.length());
      continue;
    }

    for (Index i = 1; i < N; ++i) {
      Index r = i;
      for (Index j = i + 1; j <= N; ++j) {
        if (p.omega(i) + p.d(i, j) + p.omega(j) <= optimum) r = j;
      }
      CHECK(run.pre.r[i] == r);
    }
    Index ell = N;
    for (Index k = N - 1; k >= 1; --k) {
      if (p.omega(k) + p.to_end(k) <= optimum) ell = k;
    }
    CHECK(run.pre.ell_n == ell);

    for (Index i = 1; i < N; ++i) {
      Index psi = 0;
      for (Index j = i + 1; j <= N; ++j) {
        if (reduction_value(p, ell, i, j) <= optimum) {
          psi = j;
          break;
        }
      }
      CHECK(run.psi[i] == psi);
      if (psi > i + 1) CHECK(reduction_value(p, ell, i, psi - 1) > optimum);
      if (psi == 0) CHECK(reduction_value(p, ell, i, N) > optimum);
    }

    // some candidate pair is optimal
    bool optimal_candidate = false;
    for (Index i = 1; i < N; ++i) {
      if (run.psi[i] != 0 && eval_d_brute(p, i, run.psi[i]) == optimum) optimal_candidate = true;
    }
    CHECK(optimal_candidate);
  }
}

TEST_CASE("cycle envelope bounds") {
  Rng rng(141);
  int stated_violations = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const auto p = random_instance(rng, 35);
    const Index N = p.size();
    const double optimum = wdoap_brute(p).diameter;
    const auto run = solve_exact_traced(p);
    if (run.pre.degenerate) continue;
    const auto lines = cycle_lines(p, run.pre);
    auto upper = [&](double x) {
      if (lines.empty()) return -kInf;
      return Envelope::build(lines).query(x);
    };
    for (Index i = 1; i < N; ++i) {
      const Index j = run.psi[i];
      if (j == 0) continue;
      const double x = run.selection.x[i];
      const double c = eval_c_brute(p, i, j);
      if (c > upper(x)) ++stated_violations;
      // pairs whose left end lies before ell_N and still reaches past r_k
      double covered = -kInf;
      for (Index k = i + 1; k < std::min(j, run.pre.ell_n); ++k) {
        if (run.pre.r[k] >= N) continue;
        for (Index h = k + 1; h < j; ++h) {
          const double direct = p.omega(k) + p.d(k, h) + p.omega(h);
          const double around = (p.omega(k) + p.d(i, k) + p.d(h, j) + p.omega(h)) + p.cost(i, j);
          covered = std::max(covered, std::min(direct, around));
        }
      }
      CHECK(covered <= upper(x));
      CHECK(c <= std::max(upper(x), optimum));
      CHECK(run.selection.eta[i] >= std::min(eval_d_brute(p, i, j), optimum));
      if (eval_d_brute(p, i, j) == optimum) CHECK(upper(x) <= optimum);
    }
  }
  MESSAGE("C(i,psi_i) above U(x_i): " << stated_violations);
}
