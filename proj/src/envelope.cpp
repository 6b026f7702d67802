#include "doap/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace doap {

Envelope Envelope::build(std::span<const Line> lines) {
  if (lines.empty()) throw std::invalid_argument("envelope of an empty line set");
  std::vector<Line> sorted(lines.begin(), lines.end());
  for (const auto& l : sorted) {
    if (!std::isfinite(l.slope) || !std::isfinite(l.intercept)) {
      throw std::invalid_argument("envelope lines must be finite");
    }
  }
  std::sort(sorted.begin(), sorted.end(), [](const Line& a, const Line& b) {
    return a.slope < b.slope || (a.slope == b.slope && a.intercept > b.intercept);
  });

  Envelope env;
  auto& hull = env.pieces_;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (k > 0 && sorted[k].slope == sorted[k - 1].slope) continue;  // lower duplicate
    const Line& l3 = sorted[k];
    while (hull.size() >= 2) {
      const Line& l1 = hull[hull.size() - 2];
      const Line& l2 = hull.back();
      // l2 never strictly on top iff x(l1,l3) <= x(l1,l2)
      if ((l1.intercept - l3.intercept) * (l2.slope - l1.slope) <=
          (l1.intercept - l2.intercept) * (l3.slope - l1.slope)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(l3);
  }

  env.breaks_.reserve(hull.size() - 1);
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const Line& a = hull[k];
    const Line& b = hull[k + 1];
    env.breaks_.push_back((a.intercept - b.intercept) / (b.slope - a.slope));
  }
  return env;
}

double Envelope::query(double x) const {
  const auto k = static_cast<std::size_t>(std::upper_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin());
  // neighbours guard against a rounded breakpoint
  double best = pieces_[k].at(x);
  if (k > 0) best = std::max(best, pieces_[k - 1].at(x));
  if (k + 1 < pieces_.size()) best = std::max(best, pieces_[k + 1].at(x));
  return best;
}

}  // namespace doap
