#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace taut {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);

Rational pow(const Rational& base, int exponent);
Integer factorial(unsigned k);
Integer binomial(unsigned n, unsigned k);

/// B_i in the all-positive convention B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ...
///
/// This is |b_{2i}| where b_m are the classical Bernoulli numbers defined by
/// sum_{k=0}^{m} C(m+1, k) b_k = 0; the two conventions are related by
/// b_{2i} = (-1)^{i+1} B_i. Throws DomainError for i < 1.
Rational bernoulli(int i);

/// Truncated even power series: coeffs[k] is the coefficient of x^{2k}.
class EvenPowerSeries {
 public:
  /// `order` must be even and non-negative; coefficients beyond order/2 are dropped,
  /// missing ones are zero.
  EvenPowerSeries(std::vector<Rational> coeffs, int order);

  int order() const noexcept { return order_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^{2k}; zero beyond the truncation order.
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  bool operator==(const EvenPowerSeries&) const = default;

 private:
  std::vector<Rational> coeffs_;
  int order_;
};

/// Cauchy product truncated to the smaller of the two orders.
EvenPowerSeries series_multiply(const EvenPowerSeries& a, const EvenPowerSeries& b);

/// a / b truncated to min order; b must have a nonzero constant term.
EvenPowerSeries series_divide(const EvenPowerSeries& a, const EvenPowerSeries& b);

/// Taylor expansion of x / tanh(a x), a != 0.
///
/// Computed as x / tanh(a x) = cosh(a x) / (sinh(a x) / x). The factor x is cancelled
/// symbolically, so the divisor has constant term a != 0.
EvenPowerSeries x_over_tanh_series(const Rational& a, int order);

/// x / tanh(x/2) up to x^order.
EvenPowerSeries tanh_quotient_series(int order);

/// x / tanh(x) up to x^order (generating series of the classical L-genus).
EvenPowerSeries classical_l_series(int order);

std::string to_string(const EvenPowerSeries& s);

}  // namespace taut
