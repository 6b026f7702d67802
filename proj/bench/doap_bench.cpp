// Serial reference against the OpenMP kernels, same inputs, same answers.
#include <chrono>
#include <cstdio>
#include <functional>

#include "doap/closure.hpp"
#include "doap/exact.hpp"
#include "doap/generate.hpp"
#include "doap/oracle.hpp"

using namespace doap;

namespace {

double ms(const std::function<void()>& f, int repeats) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / repeats;
}

void row(const char* kernel, long n, double serial, double parallel, bool same) {
  std::printf("%s,%ld,%.3f,%.3f,%.2f,%s\n", kernel, n, serial, parallel, serial / parallel, same ? "yes" : "NO");
}

}  // namespace

int main() {
  std::printf("kernel,n,serial_ms,parallel_ms,speedup,same\n");
  Rng rng(7);

  for (Vertex n : {1000, 2000}) {
    const Tree t = random_tree(n, {1, 100}, rng);
    const auto c = CostOracle::matrix(n, random_matrix(n, 0, 400, rng));
    const auto dec = decompose(t);
    PathTable a, b;
    const double s = ms([&] { a = direct_costs(t, dec, c, Exec::serial); }, 3);
    const double p = ms([&] { b = direct_costs(t, dec, c, Exec::parallel); }, 3);
    row("direct_costs", n, s, p, a.packed() == b.packed());
  }

  for (Vertex n : {40, 60}) {
    const Tree t = random_tree(n, {1, 100}, rng);
    const auto c = CostOracle::euclidean(embed_tree(t, 2, rng));
    Solution a{}, b{};
    const double s = ms([&] { a = best_shortcut_brute(t, c, Exec::serial); }, 1);
    const double p = ms([&] { b = best_shortcut_brute(t, c, Exec::parallel); }, 1);
    row("best_shortcut_brute", n, s, p, a.u == b.u && a.v == b.v && a.diameter == b.diameter);
  }

  for (Vertex n : {100000, 400000}) {
    const Tree t = path_tree(n, {1, 100}, rng);
    const auto inst = induce_instance(t, decompose(t), CostOracle::euclidean(embed_tree(t, 2, rng)));
    Solution a{}, b{};
    const double s = ms([&] { a = solve_exact(inst, Exec::serial); }, 3);
    const double p = ms([&] { b = solve_exact(inst, Exec::parallel); }, 3);
    row("solve_exact", n, s, p, a.u == b.u && a.v == b.v && a.diameter == b.diameter);
  }
  return 0;
}
