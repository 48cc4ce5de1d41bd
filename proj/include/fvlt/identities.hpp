#pragma once

#include <limits>
#include <string>

#include "fvlt/path.hpp"
#include "fvlt/polynomial.hpp"
#include "fvlt/profile.hpp"

namespace fvlt {

enum class Verdict { Pass, Fail, Excluded };

// One verified identity: pass iff residual <= tolerance. Excluded checks
// document a level the identity deliberately does not cover (endpoint value,
// or a touch for the absolute identity); their sides are still reported.
struct IdentityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::Pass;
  double level = std::numeric_limits<double>::quiet_NaN();
  std::string notes;
};

// Both change-of-variables routes for f(V(t)) - f(V(0)): the Stieltjes route
// integrates f'(V) against the continuous part's measure; the density route
// integrates f' against the level profile. Both add the same jump sum.
struct CovChecks {
  IdentityCheck via_stieltjes;
  IdentityCheck via_density;
};

CovChecks check_cov_pair(const FvPath& path, const Polynomial& f, double t,
                         double tolerance_scale = 1.0);
CovChecks check_cov_pair(const FvPath& path, const Polynomial& f, double t,
                         const LocalTimeProfile& profile, double tolerance_scale);

// Indicator identities at a simple level x, exact in integers (tolerance 0):
//   standard:    1_{[x,inf)}(V(t)) = 1_{[x,inf)}(V(0)) + net passages + indicator jump sum
//   alternative: 1_{(-inf,x)}(V(t)) = 1_{(-inf,x)}(V(0)) - net passages + indicator jump sum
// Levels equal to V(0) or V(t) are reported Excluded.
struct TanakaChecks {
  IdentityCheck standard;
  IdentityCheck alternative;
};

TanakaChecks check_tanaka_signed(const FvPath& path, double level, double t);

// Total variation on [0, t] of the step function s -> 1_{[x,inf)}(V(s)):
// each crossing contributes 1, a touch from strictly below contributes 2,
// a touch from above contributes 0.
double indicator_variation(const FvPath& path, double level, double t);

// Absolute identity: indicator variation = abs passages + jump-crossing
// count. Levels with a touch are reported Excluded with both sides filled in.
IdentityCheck check_tanaka_absolute(const FvPath& path, double level, double t);

// Crossing-integral bound: the level integral of the crossing counts must not
// exceed the total variation W(t); the gap W(t) - integral is recorded.
IdentityCheck check_crossing_integral(const FvPath& path, double t,
                                      double tolerance_scale = 1.0);
IdentityCheck check_crossing_integral(const FvPath& path, const LocalTimeProfile& profile,
                                      double tolerance_scale);

// Residual tolerance used by the polynomial identities:
// 1e-9 * (1 + W(T) + max|f'| over the path's value range).
double identity_tolerance(const FvPath& path, const Polynomial& f, double tolerance_scale);

}  // namespace fvlt
