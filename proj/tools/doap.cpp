// doap: single-shortcut diameter minimisation on trees.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "doap/closure.hpp"
#include "doap/generate.hpp"
#include "doap/io.hpp"
#include "doap/oracle.hpp"
#include "doap/pipeline.hpp"

using namespace doap;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kMetricViolation = 4;
constexpr Vertex kMetricCheckLimit = 200;

struct MetricViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double y = std::stod(buf);
  if (std::abs(y) < 9e15 && y == std::trunc(y)) return static_cast<std::int64_t>(y);
  return y;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

struct Loaded {
  Tree tree;
  CostOracle cost;
  double diameter_before;
};

Loaded load(const std::string& tree_file, const std::vector<std::string>& cost_spec, bool needs_metric) {
  Tree tree = read_tree_file(tree_file);
  CostOracle cost = parse_cost_spec(join(cost_spec), tree);
  if (needs_metric && tree.vertex_count() <= kMetricCheckLimit && !check_graph_metric(tree, cost, 1e-9)) {
    throw MetricViolation("cost is not graph-metric on this tree; use --mode general");
  }
  const auto dec = decompose(tree);
  const double before = std::accumulate(dec.delta.begin(), dec.delta.end(), 0.0);
  return {std::move(tree), std::move(cost), before};
}

Json report(const std::optional<Solution>& s, const Loaded& in, const std::string& mode, double ms) {
  Json j;
  if (s) {
    j["u"] = std::min(s->u, s->v);
    j["v"] = std::max(s->u, s->v);
    j["cost"] = number(s->shortcut_cost);
  } else {
    j["u"] = nullptr;
    j["v"] = nullptr;
    j["cost"] = nullptr;
  }
  j["diameter_before"] = number(in.diameter_before);
  j["diameter_after"] = s ? number(s->diameter) : Json(nullptr);
  j["mode"] = mode;
  j["wall_time_ms"] = number(ms);
  j["n"] = in.tree.vertex_count();
  return j;
}

std::vector<Vertex> parse_sizes(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 2) throw InputError(InputError::Code::parse, "bad size '" + tok + "'");
    out.push_back(static_cast<Vertex>(v));
  }
  if (out.empty()) throw InputError(InputError::Code::parse, "no sizes given");
  return out;
}

WeightRange parse_range(const std::string& text) {
  int lo = 0, hi = 0;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> lo >> comma >> hi) || comma != ',' || lo < 1 || hi < lo || !(in >> std::ws).eof()) {
    throw InputError(InputError::Code::parse, "weight range must be 'lo,hi' with 1 <= lo <= hi");
  }
  return {lo, hi};
}

Tree make_tree(const std::string& model, Vertex n, WeightRange wr, Rng& rng) {
  if (model == "path") return path_tree(n, wr, rng);
  if (model == "caterpillar") return caterpillar_tree(n, wr, rng);
  if (model == "random-tree") return random_tree(n, wr, rng);
  throw InputError(InputError::Code::parse, "unknown model '" + model + "'");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError(InputError::Code::parse, "cannot write " + path);
}

int cmd_gen(Vertex n, const std::string& model, const std::string& range, const std::string& cost_model,
            std::uint64_t seed, const std::string& prefix) {
  if (n < 2) throw InputError(InputError::Code::too_few_vertices, "n must be at least 2");
  Rng rng(seed);
  const Tree tree = make_tree(model, n, parse_range(range), rng);
  std::ostringstream t;
  write_tree(t, tree);
  write_file(prefix + ".tree", t.str());

  std::ostringstream c;
  std::string spec;
  if (cost_model == "euclidean") {
    write_coords(c, embed_tree(tree, 2, rng));
    spec = "coords " + prefix + ".cost";
  } else if (cost_model == "matrix") {
    write_matrix(c, n, CostOracle::matrix(n, random_matrix(n, 0, parse_range(range).hi * 4, rng)));
    spec = "matrix " + prefix + ".cost";
  } else {
    throw InputError(InputError::Code::parse, "cost model must be euclidean or matrix");
  }
  write_file(prefix + ".cost", c.str());
  Json j;
  j["tree"] = prefix + ".tree";
  j["cost"] = spec;
  j["n"] = n;
  j["seed"] = seed;
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_bench(const std::string& sizes_text, int repeats, const std::string& mode, std::uint64_t seed) {
  if (repeats < 1) throw InputError(InputError::Code::parse, "repeats must be positive");
  if (mode != "metric" && mode != "general" && mode != "approx") {
    throw InputError(InputError::Code::parse, "bench mode must be metric, general or approx");
  }
  std::cout << "n,mode,mean_ms\n";
  for (Vertex n : parse_sizes(sizes_text)) {
    Rng rng(seed + static_cast<std::uint64_t>(n));
    double total = 0;
    for (int r = 0; r < repeats; ++r) {
      if (mode == "general") {
        const Tree t = random_tree(n, {1, 100}, rng);
        const auto c = CostOracle::matrix(n, random_matrix(n, 0, 400, rng));
        const auto t0 = std::chrono::steady_clock::now();
        solve_general(t, c);
        total += elapsed_ms(t0);
      } else {
        const Tree t = path_tree(n, {1, 100}, rng);
        const auto c = CostOracle::euclidean(embed_tree(t, 2, rng));
        const auto t0 = std::chrono::steady_clock::now();
        if (mode == "metric") solve_metric(t, c);
        else solve_approx(t, c, 0.1);
        total += elapsed_ms(t0);
      }
    }
    std::printf("%d,%s,%.3f\n", n, mode.c_str(), total / repeats);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-shortcut diameter minimisation on trees"};
  app.require_subcommand(1);

  std::string tree_file, mode = "metric", model = "random-tree", range = "1,100", cost_model = "euclidean", out = "instance";
  std::string sizes = "1000,2000,4000";
  std::vector<std::string> cost_spec;
  double lambda = 0, epsilon = 0.1;
  std::uint64_t seed = 1;
  Vertex n = 10;
  int repeats = 3;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--tree", tree_file, "tree file: n, then n-1 lines 'u v weight'")->required();
    cmd->add_option("--cost", cost_spec, "matrix FILE | coords FILE | const K | treedist")->required()->expected(1, 2);
  };

  auto* solve = app.add_subcommand("solve", "optimal shortcut");
  add_input(solve);
  solve->add_option("--mode", mode, "metric, general or brute")->check(CLI::IsMember({"metric", "general", "brute"}));

  auto* dec = app.add_subcommand("decide", "some shortcut with diameter at most lambda");
  add_input(dec);
  dec->add_option("--lambda", lambda, "diameter bound")->required();

  auto* approx = app.add_subcommand("approx", "(1+epsilon)-approximate shortcut");
  add_input(approx);
  approx->add_option("--epsilon", epsilon, "approximation slack, > 0");

  auto* gen = app.add_subcommand("gen", "random instance files");
  gen->add_option("--n", n, "vertex count");
  gen->add_option("--model", model, "path, caterpillar or random-tree");
  gen->add_option("--weight-range", range, "edge weights lo,hi");
  gen->add_option("--cost-model", cost_model, "euclidean or matrix");
  gen->add_option("--seed", seed);
  gen->add_option("--out", out, "output prefix; writes PREFIX.tree and PREFIX.cost");

  auto* bench = app.add_subcommand("bench", "mean wall time per size, CSV");
  bench->add_option("--sizes", sizes, "comma-separated vertex counts");
  bench->add_option("--repeats", repeats);
  bench->add_option("--mode", mode, "metric, general or approx");
  bench->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    if (*solve) {
      const auto in = load(tree_file, cost_spec, mode == "metric");
      Json j;
      if (mode == "metric") {
        j = report(solve_metric(in.tree, in.cost), in, mode, elapsed_ms(t0));
      } else if (mode == "brute") {
        j = report(best_shortcut_brute(in.tree, in.cost), in, mode, elapsed_ms(t0));
      } else {
        const auto g = solve_general(in.tree, in.cost);
        j = report(g.solution, in, mode, elapsed_ms(t0));
        j["realized"] = {{"u", g.realized.u}, {"v", g.realized.v}, {"cost", number(g.realized.shortcut_cost)}};
      }
      std::cout << j.dump() << '\n';
    } else if (*dec) {
      const auto in = load(tree_file, cost_spec, true);
      const auto s = decide(in.tree, in.cost, lambda);
      auto j = report(s, in, "decide", elapsed_ms(t0));
      j["lambda"] = number(lambda);
      std::cout << j.dump() << '\n';
    } else if (*approx) {
      const auto in = load(tree_file, cost_spec, true);
      auto j = report(solve_approx(in.tree, in.cost, epsilon), in, "approx", elapsed_ms(t0));
      j["epsilon"] = number(epsilon);
      std::cout << j.dump() << '\n';
    } else if (*gen) {
      return cmd_gen(n, model, range, cost_model, seed, out);
    } else if (*bench) {
      return cmd_bench(sizes, repeats, mode, seed);
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const MetricViolation& e) {
    std::cerr << "metric violation: " << e.what() << '\n';
    return kMetricViolation;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
