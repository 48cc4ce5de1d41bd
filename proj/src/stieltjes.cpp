#include "fvlt/stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fvlt/errors.hpp"

namespace fvlt {

IntegralResult integrate_along_continuous(const FvPath& path, const Polynomial& g, double t) {
  if (t < 0.0 || t > path.horizon()) {
    throw OutOfDomain("integrate_along_continuous: t outside [0, T]");
  }
  const Polynomial anti = g.antiderivative();
  IntegralResult result{0.0, 0.0};
  for (std::size_t i = 0; i < path.segment_count(); ++i) {
    if (path.breakpoints()[i] >= t) break;
    const double u_max = std::min(path.segment_length(i), t - path.breakpoints()[i]);
    const Polynomial& p = path.segment(i);
    result.signed_part += anti(p(u_max)) - anti(p(0.0));
    for (const MonotonePiece& piece : path.monotone_pieces(i)) {
      if (piece.u_begin >= u_max) break;
      if (piece.direction == 0) continue;
      const double u1 = std::min(piece.u_end, u_max);
      result.absolute_part += piece.direction * (anti(p(u1)) - anti(p(piece.u_begin)));
    }
  }
  return result;
}

IntegralResult partition_sum_oracle(const FvPath& path, const Polynomial& g, double t,
                                    std::size_t n) {
  if (n < 1) throw InvalidParameter("partition_sum_oracle: n must be >= 1");
  if (t < 0.0 || t > path.horizon()) {
    throw OutOfDomain("partition_sum_oracle: t outside [0, T]");
  }

  std::vector<double> points;
  points.reserve(n + 1 + path.segment_count());
  for (std::size_t k = 0; k <= n; ++k) {
    points.push_back(t * (static_cast<double>(k) / static_cast<double>(n)));
  }
  for (double bp : path.breakpoints()) {
    if (bp > 0.0 && bp < t) points.push_back(bp);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // V^c(s) = V(s) - (sum of jumps up to s); computed from scratch here so the
  // oracle stays independent of the closed-form route.
  const std::vector<TimedJump> jumps = path.jumps_up_to(t);
  std::size_t jump_idx = 0;
  double jump_cum = 0.0;
  auto continuous_part_at = [&](double s) {
    while (jump_idx < jumps.size() && jumps[jump_idx].time <= s) {
      jump_cum += jumps[jump_idx].size;
      ++jump_idx;
    }
    return path.eval(s).value - jump_cum;
  };

  IntegralResult result{0.0, 0.0};
  double prev_value = path.eval(points.front()).value;
  double prev_cont = continuous_part_at(points.front());
  for (std::size_t k = 1; k < points.size(); ++k) {
    const double cont = continuous_part_at(points[k]);
    const double delta = cont - prev_cont;
    const double weight = g(prev_value);
    result.signed_part += weight * delta;
    result.absolute_part += weight * std::abs(delta);
    prev_cont = cont;
    prev_value = path.eval(points[k]).value;
  }
  return result;
}

}  // namespace fvlt
