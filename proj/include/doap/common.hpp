#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace doap {

/// 1-based vertex id of the input tree.
using Vertex = std::int32_t;
/// 1-based position along the diametral path (v_1 .. v_N).
using Index = std::int32_t;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Kernels that have a data-parallel inner loop take an execution policy.
/// `serial` is the reference path kept for testing and benchmarking.
enum class Exec { serial, parallel };

/// Malformed or out-of-contract input (bad ids, not a tree, parse failures).
class InputError : public std::runtime_error {
 public:
  enum class Code {
    too_few_vertices,
    wrong_edge_count,
    vertex_out_of_range,
    self_loop,
    bad_weight,
    cycle,
    not_a_path,
    bad_instance,
    bad_cost,
    parse,
  };

  InputError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

/// A condition the algorithms guarantee was violated at runtime.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A shortcut between two vertices, with its cost and the diameter of the
/// augmented graph. For path-level solvers u/v are path indices; the
/// tree-level entry points translate them to tree vertex ids.
struct Solution {
  std::int32_t u = 0;
  std::int32_t v = 0;
  double shortcut_cost = 0.0;
  double diameter = 0.0;
};

}  // namespace doap
