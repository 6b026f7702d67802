#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "doap/path_instance.hpp"

namespace doap {

/// inclusive: look for D(i,j) <= lambda. exclusive: look for D(i,j) < lambda.
/// The exact solver probes with `exclusive`, so "no pair" means lambda <= D*.
enum class Bound { inclusive, exclusive };

/// Every index sequence of the linear-time search procedure for one lambda.
/// Sequences are 1-based with slot 0 unused.
struct DecisionState {
  double lambda = 0;
  Bound bound = Bound::inclusive;
  std::vector<Index> r;      // max j > i with omega(i)+d(i,j)+omega(j) within lambda, else i
  Index ell_n = 0;           // min i < N with omega(i)+d(i,N) within lambda, else N
  std::vector<Index> mu;     // min j > i with U(i,j) within lambda, else N+1
  std::vector<Index> sigma;  // max j > i with S-bar(i,j) within lambda, else i
  std::vector<Index> theta;  // min i < j with E-bar(i,j) within lambda, else j
  std::vector<Index> rho;    // 0 when undefined
  double delta_min = kInf;   // lambda - max_k kappa(k)
  double kappa_max = -kInf;  // max over r_k < N of omega(k)+omega(r_k+1)-d(k,r_k+1)

  struct Moves {
    std::int64_t r = 0, ell_n = 0, mu = 0, sigma = 0, theta = 0, rho = 0;
  } moves;

  std::optional<std::pair<Index, Index>> answer;
};

/// Runs every sweep regardless of the d(1,N) shortcut and records the state.
/// Meaningful only when d(1,N) exceeds lambda.
DecisionState decision_state(const PathInstance& inst, double lambda, Bound bound = Bound::inclusive);

/// Some (i,j) with D(i,j) <= lambda (or < lambda), or nullopt. O(N).
std::optional<std::pair<Index, Index>> feasible(const PathInstance& inst, double lambda,
                                                Bound bound = Bound::inclusive);

}  // namespace doap
