#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "doap/cost.hpp"
#include "doap/tree.hpp"

namespace doap {

/// Tree text: first token n, then n-1 lines "u v weight".
Tree read_tree(std::istream& in);
Tree read_tree_file(const std::string& path);
void write_tree(std::ostream& out, const Tree& tree);

/// n rows of n reals; the diagonal is ignored.
CostOracle read_matrix(std::istream& in, Vertex n);
/// n rows of D reals each.
CostOracle read_coords(std::istream& in, Vertex n);

void write_matrix(std::ostream& out, Vertex n, const CostOracle& cost);
void write_coords(std::ostream& out, const std::vector<std::vector<double>>& points);

/// One of "matrix FILE", "coords FILE", "const K", "treedist" (the tokens may
/// also arrive as separate arguments, joined by a space).
CostOracle parse_cost_spec(const std::string& spec, const Tree& tree);

}  // namespace doap
