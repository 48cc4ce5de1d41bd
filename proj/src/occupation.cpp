#include "fvlt/occupation.hpp"

#include <algorithm>
#include <cmath>

#include "fvlt/errors.hpp"

namespace fvlt {

OccupationMass occupation_mass(const FvPath& path, double t, double a, double b) {
  if (!(t > 0.0) || t > path.horizon()) {
    throw OutOfDomain("occupation_mass: t outside (0, T]");
  }
  if (!(a < b)) throw EmptyInterval("occupation_mass: requires a < b");

  OccupationMass mass{0.0, 0.0, a, b, t};
  for (std::size_t i = 0; i < path.segment_count(); ++i) {
    if (path.breakpoints()[i] >= t) break;
    const double u_max = std::min(path.segment_length(i), t - path.breakpoints()[i]);
    const Polynomial& p = path.segment(i);
    for (const MonotonePiece& piece : path.monotone_pieces(i)) {
      if (piece.u_begin >= u_max) break;
      if (piece.direction == 0) continue;
      const double v0 = p(piece.u_begin);
      const double v1 = p(std::min(piece.u_end, u_max));
      const double lo = std::min(v0, v1);
      const double hi = std::max(v0, v1);
      const double overlap = std::min(hi, b) - std::max(lo, a);
      if (overlap > 0.0) {
        mass.theta += piece.direction * overlap;
        mass.vartheta += overlap;
      }
    }
  }
  return mass;
}

DensityResiduals verify_density(const FvPath& path, double t, double a, double b) {
  return verify_density(path, build_profile(path, t), a, b);
}

DensityResiduals verify_density(const FvPath& path, const LocalTimeProfile& profile,
                                double a, double b) {
  if (!(a < b)) throw EmptyInterval("verify_density: requires a < b");
  const auto& boundaries = profile.cell_boundaries;

  double range = 0.0;
  if (!boundaries.empty()) range = boundaries.back() - boundaries.front();
  const double delta = 1e-9 * (1.0 + range);
  auto near_boundary = [&](double v) {
    for (double c : boundaries) {
      if (std::abs(v - c) <= delta) return true;
    }
    return false;
  };

  DensityResiduals out{0.0, 0.0, a, b, false};
  if (near_boundary(a)) {
    out.a_used = a + delta;
    out.nudged = true;
  }
  if (near_boundary(b)) {
    out.b_used = b - delta;
    out.nudged = true;
  }
  if (!(out.a_used < out.b_used)) {
    out.a_used = a;
    out.b_used = b;
    out.nudged = false;
  }

  const OccupationMass mass = occupation_mass(path, profile.horizon, out.a_used, out.b_used);
  double net = 0.0, abs_part = 0.0;
  if (boundaries.size() >= 2) {
    const ProfileIntegral pi =
        integrate_against_profile(profile, Polynomial::constant(1.0), out.a_used, out.b_used);
    net = pi.net;
    abs_part = pi.abs;
  }
  out.signed_residual = std::abs(mass.theta - net);
  out.absolute_residual = std::abs(mass.vartheta - abs_part);
  return out;
}

}  // namespace fvlt
