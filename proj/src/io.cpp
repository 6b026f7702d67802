#include "doap/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace doap {

namespace {

[[noreturn]] void fail(const std::string& what) { throw InputError(InputError::Code::parse, what); }

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  return in;
}

template <class T>
T next(std::istream& in, const char* what) {
  std::string token;
  if (!(in >> token)) fail(std::string("unexpected end of input while reading ") + what);
  T value{};
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) fail("bad " + std::string(what) + " '" + token + "'");
  return value;
}

void expect_end(std::istream& in, const char* what) {
  std::string extra;
  if (in >> extra) fail(std::string("trailing data after ") + what + ": '" + extra + "'");
}

}  // namespace

Tree read_tree(std::istream& in) {
  const auto n = next<long long>(in, "vertex count");
  if (n < 2 || n > std::numeric_limits<Vertex>::max()) {
    throw InputError(InputError::Code::too_few_vertices, "vertex count must be at least 2");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (long long k = 0; k + 1 < n; ++k) {
    Edge e;
    e.u = next<Vertex>(in, "edge endpoint");
    e.v = next<Vertex>(in, "edge endpoint");
    e.weight = next<double>(in, "edge weight");
    edges.push_back(e);
  }
  expect_end(in, "the edge list");
  return build_tree(static_cast<Vertex>(n), std::move(edges));
}

Tree read_tree_file(const std::string& path) {
  auto in = open(path);
  return read_tree(in);
}

void write_tree(std::ostream& out, const Tree& tree) {
  out << tree.vertex_count() << '\n';
  out << std::setprecision(17);
  for (const auto& e : tree.edges()) out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
}

CostOracle read_matrix(std::istream& in, Vertex n) {
  const auto sn = static_cast<std::size_t>(n);
  std::vector<double> values(sn * sn);
  for (auto& x : values) x = next<double>(in, "matrix entry");
  expect_end(in, "the cost matrix");
  return CostOracle::matrix(n, std::move(values));
}

CostOracle read_coords(std::istream& in, Vertex n) {
  std::vector<std::vector<double>> points;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::vector<double> p;
    std::string token;
    while (row >> token) {
      std::istringstream one(token);
      p.push_back(next<double>(one, "coordinate"));
    }
    if (!p.empty()) points.push_back(std::move(p));
  }
  if (points.size() != static_cast<std::size_t>(n)) {
    fail("expected " + std::to_string(n) + " points, got " + std::to_string(points.size()));
  }
  return CostOracle::euclidean(points);
}

void write_matrix(std::ostream& out, Vertex n, const CostOracle& cost) {
  out << std::setprecision(17);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) out << (v > 1 ? " " : "") << cost(u, v);
    out << '\n';
  }
}

void write_coords(std::ostream& out, const std::vector<std::vector<double>>& points) {
  out << std::setprecision(17);
  for (const auto& p : points) {
    for (std::size_t k = 0; k < p.size(); ++k) out << (k ? " " : "") << p[k];
    out << '\n';
  }
}

CostOracle parse_cost_spec(const std::string& spec, const Tree& tree) {
  std::istringstream words(spec);
  std::string kind, arg;
  words >> kind;
  std::getline(words >> std::ws, arg);
  const Vertex n = tree.vertex_count();
  if (kind == "treedist" && arg.empty()) return CostOracle::tree_distance(tree);
  if (kind == "const" && !arg.empty()) {
    std::istringstream value(arg);
    const double k = next<double>(value, "constant cost");
    expect_end(value, "the constant cost");
    return CostOracle::constant(n, k);
  }
  if (kind == "matrix" && !arg.empty()) {
    auto in = open(arg);
    return read_matrix(in, n);
  }
  if (kind == "coords" && !arg.empty()) {
    auto in = open(arg);
    return read_coords(in, n);
  }
  fail("cost must be one of 'matrix FILE', 'coords FILE', 'const K', 'treedist'; got '" + spec + "'");
}

}  // namespace doap
