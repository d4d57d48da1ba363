#include "taut/exact_arith.hpp"

#include <algorithm>
#include <sstream>

#include "taut/errors.hpp"

namespace taut {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1U) result *= b;
    b *= b;
  }
  return result;
}

Integer factorial(unsigned k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational bernoulli(int i) {
  if (i < 1) throw DomainError("bernoulli: index must be >= 1, got " + std::to_string(i));
  const unsigned m_max = 2U * static_cast<unsigned>(i);
  std::vector<Rational> b(m_max + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= m_max; ++m) {
    Rational acc = 0;
    for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[k];
    b[m] = -acc / Rational(m + 1);
    b[m].canonicalize();
  }
  return abs(b[m_max]);
}

EvenPowerSeries::EvenPowerSeries(std::vector<Rational> coeffs, int order)
    : coeffs_(std::move(coeffs)), order_(order) {
  if (order < 0 || order % 2 != 0)
    throw DomainError("series truncation order must be even and non-negative, got " +
                      std::to_string(order));
  coeffs_.resize(static_cast<std::size_t>(order / 2 + 1));
}

EvenPowerSeries series_multiply(const EvenPowerSeries& a, const EvenPowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  const std::size_t len = static_cast<std::size_t>(order / 2 + 1);
  std::vector<Rational> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return {std::move(out), order};
}

EvenPowerSeries series_divide(const EvenPowerSeries& a, const EvenPowerSeries& b) {
  if (b[0] == 0) throw DomainError("series division by a series with zero constant term");
  const int order = std::min(a.order(), b.order());
  const std::size_t len = static_cast<std::size_t>(order / 2 + 1);
  std::vector<Rational> q(len);
  for (std::size_t k = 0; k < len; ++k) {
    Rational acc = a[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return {std::move(q), order};
}

EvenPowerSeries x_over_tanh_series(const Rational& a, int order) {
  if (a == 0) throw DomainError("x_over_tanh_series: scale must be nonzero");
  if (order < 0 || order % 2 != 0)
    throw DomainError("series truncation order must be even and non-negative, got " +
                      std::to_string(order));
  const std::size_t len = static_cast<std::size_t>(order / 2 + 1);
  // cosh(a x) = sum a^{2k} x^{2k} / (2k)!, sinh(a x) / x = sum a^{2k+1} x^{2k} / (2k+1)!
  std::vector<Rational> cosh_c(len), sinh_c(len);
  for (std::size_t k = 0; k < len; ++k) {
    const auto twok = static_cast<unsigned>(2 * k);
    cosh_c[k] = pow(a, static_cast<int>(twok)) / Rational(factorial(twok));
    sinh_c[k] = pow(a, static_cast<int>(twok + 1)) / Rational(factorial(twok + 1));
  }
  return series_divide(EvenPowerSeries(std::move(cosh_c), order),
                       EvenPowerSeries(std::move(sinh_c), order));
}

EvenPowerSeries tanh_quotient_series(int order) { return x_over_tanh_series(Rational(1, 2), order); }

EvenPowerSeries classical_l_series(int order) { return x_over_tanh_series(Rational(1), order); }

std::string to_string(const EvenPowerSeries& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) os << ", ";
    os << to_string(s[k]);
  }
  os << "] + O(x^" << s.order() + 2 << ')';
  return os.str();
}

}  // namespace taut
