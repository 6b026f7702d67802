#pragma once

#include <span>
#include <vector>

namespace doap {

struct Line {
  double slope;
  double intercept;
  double at(double x) const noexcept { return slope * x + intercept; }
};

/// Upper envelope of a fixed set of lines. Pieces are ordered by strictly
/// increasing slope; piece k is the maximum on [breakpoint k-1, breakpoint k].
class Envelope {
 public:
  /// Throws std::invalid_argument on an empty or non-finite input.
  static Envelope build(std::span<const Line> lines);

  /// max over the input lines at x, O(log M).
  double query(double x) const;

  const std::vector<Line>& pieces() const noexcept { return pieces_; }
  const std::vector<double>& breakpoints() const noexcept { return breaks_; }

 private:
  std::vector<Line> pieces_;
  std::vector<double> breaks_;  // pieces_.size() - 1 entries
};

}  // namespace doap
