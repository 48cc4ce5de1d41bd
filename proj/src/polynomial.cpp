#include "fvlt/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace fvlt {

namespace {

void strip_trailing_zeros(std::vector<double>& c) {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
  strip_trailing_zeros(coefficients_);
}

Polynomial Polynomial::constant(double c) {
  return Polynomial(std::vector<double>{c});
}

double Polynomial::operator()(double u) const {
  double acc = 0.0;
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    acc = acc * u + coefficients_[k];
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coefficients_.size() <= 1) return Polynomial();
  std::vector<double> d(coefficients_.size() - 1);
  for (std::size_t k = 1; k < coefficients_.size(); ++k) {
    d[k - 1] = coefficients_[k] * static_cast<double>(k);
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  if (coefficients_.empty()) return Polynomial();
  std::vector<double> a(coefficients_.size() + 1, 0.0);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    a[k + 1] = coefficients_[k] / static_cast<double>(k + 1);
  }
  return Polynomial(std::move(a));
}

double Polynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (double c : coefficients_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial Polynomial::minus(double c) const {
  std::vector<double> out = coefficients_;
  if (out.empty()) out.push_back(0.0);
  out[0] -= c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::plus(const Polynomial& other) const {
  std::vector<double> out(std::max(coefficients_.size(), other.coefficients_.size()), 0.0);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) out[k] += coefficients_[k];
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) out[k] += other.coefficients_[k];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(double factor) const {
  std::vector<double> out = coefficients_;
  for (double& c : out) c *= factor;
  return Polynomial(std::move(out));
}

}  // namespace fvlt
