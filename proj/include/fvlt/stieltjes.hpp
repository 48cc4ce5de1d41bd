#pragma once

#include <cstddef>

#include "fvlt/path.hpp"
#include "fvlt/polynomial.hpp"

namespace fvlt {

// Integrals of g(V(s)) over [0, t] against the continuous part's signed
// Stieltjes measure (signed_part) and its total variation measure
// (absolute_part). For nonnegative g, |signed_part| <= absolute_part.
struct IntegralResult {
  double signed_part;
  double absolute_part;
};

// Closed form: on each segment g(V)dV^c has the exact antiderivative
// G(V(u)) with G the antiderivative of g; the absolute part flips the sign
// of decreasing monotone pieces.
IntegralResult integrate_along_continuous(const FvPath& path, const Polynomial& g, double t);

// Independent Riemann-Stieltjes oracle: left-endpoint sums over a uniform
// n-point partition of [0, t] refined by the breakpoints. Converges to the
// closed form as n grows; deliberately shares no code with it.
IntegralResult partition_sum_oracle(const FvPath& path, const Polynomial& g, double t,
                                    std::size_t n);

}  // namespace fvlt
