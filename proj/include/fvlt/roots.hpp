#pragma once

#include <vector>

#include "fvlt/polynomial.hpp"

namespace fvlt {

// One real root of a polynomial strictly inside an interval, together with the
// sign of the polynomial on either side of it. Even-multiplicity roots have
// sign_before == sign_after.
struct PolyRoot {
  double position;
  int sign_before;  // -1, 0, +1
  int sign_after;
  bool crosses() const { return sign_before * sign_after < 0; }
};

// All real roots of q strictly inside (a, b), ascending. Roots within the
// bisection resolution of a or b are dropped; interval endpoints are the
// caller's business. q must not be numerically zero on [a, b].
std::vector<PolyRoot> isolate_roots(const Polynomial& q, double a, double b);

// Positions in (a, b) where q changes sign (odd-multiplicity roots).
std::vector<double> sign_change_points(const Polynomial& q, double a, double b);

struct ValueRange {
  double lo;
  double hi;
};

// Min and max of q over [a, b]: endpoints plus interior critical points.
ValueRange value_range(const Polynomial& q, double a, double b);

// Magnitude scale of q on [a, b] (sum of |c_k| * max(|a|,|b|)^k); the basis
// for zero tests.
double coefficient_scale(const Polynomial& q, double a, double b);

// Sign of q(u0 + dir * eps) for vanishing eps > 0, assuming q(u0) = 0: scans
// derivatives for the first one that does not vanish at u0. Returns 0 when q
// vanishes to all orders (numerically the zero polynomial near u0).
int one_sided_sign(const Polynomial& q, double u0, int dir, double a, double b);

}  // namespace fvlt
