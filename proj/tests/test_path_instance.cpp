#include <algorithm>

#include "doctest.h"
#include "doap/oracle.hpp"
#include "support.hpp"

using namespace doap;
using namespace testing_support;

TEST_CASE("induced instances") {
  const Tree t5 = p5();
  const auto p = induce_instance(t5, decompose(t5), CostOracle::constant(5, 1));
  CHECK(p.size() == 5);
  for (Index i = 1; i <= 5; ++i) CHECK(p.w(i) == 0);

  const Tree cat = caterpillar();
  const auto c = induce_instance(cat, decompose(cat), CostOracle::tree_distance(cat));
  REQUIRE(c.size() == 3);
  CHECK(c.d(1, 2) == 2);
  CHECK(c.d(2, 3) == 2);
  CHECK(c.w(1) == 0);
  CHECK(c.w(2) == 1);
  CHECK(c.w(3) == 0);

  const Tree one = build_tree(2, {{1, 2, 5}});
  const auto e = induce_instance(one, decompose(one), CostOracle::constant(2, 3));
  CHECK(e.size() == 2);
  CHECK(e.w(1) == 0);
  CHECK(e.w(2) == 0);

  auto dec = decompose(cat);
  dec.hang_weight.pop_back();
  CHECK_THROWS_AS(induce_instance(cat, dec, CostOracle::tree_distance(cat)), InputError);
  CHECK_THROWS_AS(induce_instance(cat, decompose(cat), CostOracle::constant(2, 1)), InputError);
}

TEST_CASE("relaxed weights") {
  CHECK(relaxed_weights(std::vector<double>{1, 1}, std::vector<double>{0, 0, 0}) == std::vector<double>{0, 0, 0});
  CHECK(relaxed_weights(std::vector<double>{2, 3, 2}, std::vector<double>{0, 1, 2, 0}) ==
        std::vector<double>{0, 1, 2, 0});
  // a heavy node reaches two and three steps to its right
  CHECK(relaxed_weights(std::vector<double>{1, 2, 1, 5}, std::vector<double>{0, 4, 0, 0, 0}) ==
        std::vector<double>{3, 4, 2, 1, 0});
  CHECK_THROWS_AS(PathInstance({1, 1}, {0, 2, 0}, CostOracle::constant(3, 1)), InputError);
}

TEST_CASE("relaxed weights match the definition") {
  Rng rng(21);
  for (int rep = 0; rep < 100; ++rep) {
    const auto inst = random_path_instance(std::uniform_int_distribution<Index>(2, 40)(rng), 20, 60, rng);
    const Index N = inst.size();
    CHECK(inst.omega(1) == 0);
    CHECK(inst.omega(N) == 0);
    for (Index i = 1; i <= N; ++i) {
      double best = -kInf;
      for (Index j = 1; j <= N; ++j) best = std::max(best, inst.w(j) - inst.d(i, j));
      CHECK(inst.omega(i) == best);
      CHECK(inst.omega(i) >= inst.w(i));
      for (Index j = i; j <= N; ++j) {
        CHECK(inst.omega(i) <= inst.omega(j) + inst.d(i, j));
        CHECK(inst.omega(j) <= inst.omega(i) + inst.d(i, j));
      }
    }
  }
}

TEST_CASE("instance validation") {
  const auto c = CostOracle::constant(4, 1);
  CHECK_THROWS_AS(PathInstance({1}, {0, 0, 0}, c), InputError);
  CHECK_THROWS_AS(PathInstance({}, {0}, c), InputError);
  CHECK_THROWS_AS(PathInstance({1, 0}, {0, 0, 0}, c), InputError);
  CHECK_THROWS_AS(PathInstance({1, 1}, {1, 0, 0}, c), InputError);
  CHECK_THROWS_AS(PathInstance({1, 1}, {0, -1, 0}, c), InputError);
  CHECK_THROWS_AS(PathInstance({1, 1}, {0, 0, 0}, c, {1, 2}), InputError);
  CHECK_THROWS_AS(PathInstance({1, 1}, {0, 0, 0}, c, {1, 2, 9}), InputError);
  CHECK_NOTHROW(PathInstance({1, 1}, {0, 1, 0}, c, {4, 2, 3}));
}

TEST_CASE("components on the unit five-path") {
  const auto p = p5_unit_cost();
  const auto use = eval_use(p, 1, 5);
  CHECK(use.U == 1);
  CHECK(use.S == 2);
  CHECK(use.E == 2);
  CHECK(eval_c(p, 1, 5) == 2);
  CHECK(eval_c_brute(p, 1, 5) == 2);
  CHECK(eval_d(p, 1, 5) == 2);
  CHECK(eval_d_brute(p, 1, 5) == 2);
  CHECK(eval_d_brute(p, 2, 4) == 3);
  CHECK(eval_d(p, 2, 4) == 3);

  CHECK(eval_c(p, 2, 3) == -kInf);
  CHECK(eval_c(p, 2, 4) == -kInf);
  CHECK(eval_c_brute(p, 2, 3) == -kInf);
  CHECK(eval_c_brute(p, 2, 4) == -kInf);

  CHECK_THROWS_AS(eval_use(p, 3, 3), InputError);
  CHECK_THROWS_AS(eval_use(p, 0, 2), InputError);
  CHECK_THROWS_AS(eval_use(p, 4, 6), InputError);
}

TEST_CASE("two-vertex instance") {
  const PathInstance p({7}, {0, 0}, CostOracle::constant(2, 3));
  CHECK(eval_d_brute(p, 1, 2) == 3);
  CHECK(eval_d(p, 1, 2) == 3);
  const PathInstance q({2}, {0, 0}, CostOracle::constant(2, 3));
  CHECK(eval_d_brute(q, 1, 2) == 2);
  CHECK(eval_d(q, 1, 2) == 2);
}

TEST_CASE("zero node weights reduce C to interior distances") {
  Rng rng(8);
  const Tree t = path_tree(12, {1, 9}, rng);
  const auto p = induce_instance(t, decompose(t), euclidean_for(t, rng));
  for (Index i = 1; i <= p.size(); ++i) {
    for (Index j = i + 3; j <= p.size(); ++j) {
      double best = -kInf;
      for (Index k = i + 1; k < j; ++k) {
        for (Index h = k + 1; h < j; ++h) {
          best = std::max(best, std::min(p.d(k, h), (p.d(i, k) + p.d(h, j)) + p.cost(i, j)));
        }
      }
      CHECK(eval_c_brute(p, i, j) == best);
    }
  }
}

TEST_CASE("decomposition equals the definitional diameter") {
  Rng rng(31);
  for (int rep = 0; rep < 120; ++rep) {
    const auto p = random_path_instance(std::uniform_int_distribution<Index>(2, 50)(rng), 20, 80, rng);
    const Index N = p.size();
    for (Index i = 1; i < N; ++i) {
      for (Index j = i + 1; j <= N; ++j) {
        const auto use = eval_use(p, i, j);
        const double c_fast = eval_c(p, i, j);
        const double c_slow = eval_c_brute(p, i, j);
        REQUIRE(c_fast == c_slow);
        REQUIRE(std::max({use.U, use.S, use.E, c_slow}) == eval_d_brute(p, i, j));
      }
    }
  }
}

TEST_CASE("component monotonicity") {
  Rng rng(41);
  for (int rep = 0; rep < 60; ++rep) {
    const auto p = random_path_instance(std::uniform_int_distribution<Index>(3, 30)(rng), 20, 80, rng);
    const Index N = p.size();
    for (Index i = 1; i < N; ++i) {
      for (Index j = i + 1; j <= N; ++j) {
        const auto here = eval_use(p, i, j);
        const double c_here = eval_c_brute(p, i, j);
        if (j + 1 <= N) {
          const auto right = eval_use(p, i, j + 1);
          CHECK(right.U <= here.U);
          CHECK(here.S <= right.S);
          CHECK(right.E <= here.E);
          CHECK(c_here <= eval_c_brute(p, i, j + 1));
        }
        if (i + 1 < j) {
          const auto inner = eval_use(p, i + 1, j);
          CHECK(here.U <= inner.U);
          CHECK(here.S <= inner.S);  // S(i-1,j) <= S(i,j) read one step up
          CHECK(inner.E <= here.E);  // E(i,j) <= E(i-1,j) read one step up
          CHECK(eval_c_brute(p, i + 1, j) <= c_here);
        }
      }
    }
  }
}

TEST_CASE("induced instance reproduces augmented tree diameters") {
  Rng rng(51);
  for (int rep = 0; rep < 80; ++rep) {
    const Tree t = any_tree(std::uniform_int_distribution<Vertex>(2, 25)(rng), rng);
    const auto c = metric_cost_for(t, rng);
    const auto dec = decompose(t);
    const auto p = induce_instance(t, dec, c);
    const auto dist = all_pairs_distances(t);

    // diameters of the hanging subtrees
    double hang_diam = 0;
    const Vertex n = t.vertex_count();
    for (Vertex a = 1; a <= n; ++a) {
      for (Vertex b = a + 1; b <= n; ++b) {
        if (dec.subtree_of[a] == dec.subtree_of[b]) hang_diam = std::max(hang_diam, dist[a * (n + 1) + b]);
      }
    }

    for (Index i = 1; i < p.size(); ++i) {
      for (Index j = i + 1; j <= p.size(); ++j) {
        const Vertex u = dec.path[i - 1], v = dec.path[j - 1];
        const double brute = eval_d_brute(p, i, j);
        CHECK(brute == augmented_diameter(t, dist, u, v, c(u, v)));
        CHECK(brute >= hang_diam);
        CHECK(eval_d(p, i, j) == brute);
      }
    }
  }
}
