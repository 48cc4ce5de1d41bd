#pragma once

#include "fvlt/path.hpp"
#include "fvlt/profile.hpp"

namespace fvlt {

// Signed (theta) and absolute (vartheta) occupation mass of the value window
// [from, to] on the time interval [0, horizon].
struct OccupationMass {
  double theta;
  double vartheta;
  double from;
  double to;
  double horizon;
};

// Exact: each monotone sub-piece of each segment maps time one-to-one onto a
// value interval, so the mass it contributes is the (signed) overlap of that
// interval with [a, b].
OccupationMass occupation_mass(const FvPath& path, double t, double a, double b);

struct DensityResiduals {
  double signed_residual;    // |theta - integral of net passages over [a,b]|
  double absolute_residual;  // |vartheta - integral of abs passages over [a,b]|
  double a_used;
  double b_used;
  bool nudged;               // endpoints were moved off critical values
};

// Occupation-density check: compares occupation masses against the profile
// integrals with unit weight. Interval endpoints sitting on critical values
// are nudged inward by 1e-9 * (value range), and the nudge is reported.
DensityResiduals verify_density(const FvPath& path, double t, double a, double b);
DensityResiduals verify_density(const FvPath& path, const LocalTimeProfile& profile,
                                double a, double b);

}  // namespace fvlt
