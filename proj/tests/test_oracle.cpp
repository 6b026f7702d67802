#include "doctest.h"
#include "doap/oracle.hpp"
#include "support.hpp"

using namespace doap;
using namespace testing_support;

TEST_CASE("augmented diameter examples") {
  const Tree t5 = p5();
  CHECK(augmented_diameter(t5, 1, 5, 1) == 2);
  CHECK(augmented_diameter(t5, 5, 1, 1) == 2);
  CHECK(augmented_diameter(t5, 1, 5, 4) == 4);
  CHECK(augmented_diameter(t5, 2, 3, 0.5) == 3.5);  // a cheaper parallel edge
  CHECK(tree_diameter(t5) == 4);
  CHECK_THROWS_AS(augmented_diameter(t5, 2, 2, 1), InputError);
  CHECK_THROWS_AS(augmented_diameter(t5, 0, 2, 1), InputError);
  CHECK_THROWS_AS(augmented_diameter(t5, 1, 6, 1), InputError);
}

TEST_CASE("brute shortcut examples") {
  const auto s = best_shortcut_brute(p5(), CostOracle::constant(5, 1));
  CHECK(s.u == 1);
  CHECK(s.v == 5);
  CHECK(s.diameter == 2);

  const Tree two = build_tree(2, {{1, 2, 5}});
  CHECK(best_shortcut_brute(two, CostOracle::constant(2, 3)).diameter == 3);
  CHECK(best_shortcut_brute(two, CostOracle::constant(2, 8)).diameter == 5);

  const Tree star = build_tree(5, {{1, 2, 1}, {1, 3, 1}, {1, 4, 1}, {1, 5, 1}});
  CHECK(best_shortcut_brute(star, CostOracle::constant(5, 2)).diameter == 2);

  const auto w = wdoap_brute(p5_unit_cost());
  CHECK(w.u == 1);
  CHECK(w.v == 5);
  CHECK(w.diameter == 2);
  const PathInstance chain3({2, 3}, {0, 0, 0}, CostOracle::matrix(3, {0, 2, 5, 2, 0, 3, 5, 3, 0}));
  const auto c3 = wdoap_brute(chain3);
  CHECK(c3.u == 1);
  CHECK(c3.v == 2);
  CHECK(c3.diameter == 5);
}

TEST_CASE("oracle properties") {
  Rng rng(191);
  for (int rep = 0; rep < 60; ++rep) {
    const Tree t = any_tree(std::uniform_int_distribution<Vertex>(2, 18)(rng), rng);
    const auto c = metric_cost_for(t, rng);
    const auto dist = all_pairs_distances(t);
    const double diam = tree_diameter(t);
    const Vertex n = t.vertex_count();
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) {
        const double a = augmented_diameter(t, dist, u, v, c(u, v));
        CHECK(a <= diam);
        CHECK(a == augmented_diameter(t, dist, v, u, c(u, v)));
      }
    }
    const auto brute = best_shortcut_brute(t, c, rep % 2 == 0 ? Exec::serial : Exec::parallel);
    CHECK(brute.diameter == augmented_diameter(t, dist, brute.u, brute.v, c(brute.u, brute.v)));
    CHECK(wdoap_brute(induce_instance(t, decompose(t), c)).diameter == brute.diameter);
  }
}

TEST_CASE("brute closure on a two-vertex tree") {
  const Tree two = build_tree(2, {{1, 2, 5}});
  const auto c = CostOracle::constant(2, 3);
  CHECK(closure_brute(two, {1, 2}, c).at(1, 2) == 3);
  const auto d = CostOracle::tree_distance(two);
  CHECK(closure_brute(two, {1, 2}, d).at(1, 2) == 5);
}
