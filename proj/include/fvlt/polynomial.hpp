#pragma once

#include <vector>

namespace fvlt {

// Univariate real polynomial in a local coordinate u; coefficients[k]
// multiplies u^k. Trailing zero coefficients are stripped on construction so
// degree() is well defined; the zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);

  static Polynomial constant(double c);

  // Value at u (Horner evaluation).
  double operator()(double u) const;

  Polynomial derivative() const;

  // Antiderivative with zero constant term.
  Polynomial antiderivative() const;

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  const std::vector<double>& coefficients() const { return coefficients_; }
  double max_abs_coefficient() const;

  // p - c, as a polynomial in the same coordinate.
  Polynomial minus(double c) const;

  Polynomial plus(const Polynomial& other) const;
  Polynomial scaled(double factor) const;

 private:
  std::vector<double> coefficients_;
};

}  // namespace fvlt
