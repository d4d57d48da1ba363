#include "taut/char_class.hpp"

#include <algorithm>
#include <functional>

#include "taut/errors.hpp"
#include "taut/sym_calc.hpp"

namespace taut {

BSORing bso_ring(int d, const std::string& suffix) {
  if (d < 2) throw DomainError("bso_ring: rank must be >= 2, got " + std::to_string(d));
  std::vector<Generator> gens;
  for (int k = 1; k <= (d - 1) / 2; ++k) gens.push_back({"p" + std::to_string(k) + suffix, 4 * k});
  if (d % 2 == 0) gens.push_back({"e" + suffix, d});
  return BSORing{d, make_table(std::move(gens))};
}

GradedPoly BSORing::pontrjagin(int k) const {
  if (k < 0) throw DomainError("negative Pontrjagin index");
  if (k == 0) return GradedPoly::constant(table, 1);
  if (k <= pontrjagin_count()) return GradedPoly::monomial(table, [&] {
      Exponents e(table->size(), 0);
      e[static_cast<std::size_t>(k - 1)] = 1;
      return e;
    }());
  if (d % 2 == 0 && k == d / 2) {
    Exponents e(table->size(), 0);
    e.back() = 2;
    return GradedPoly::monomial(table, e);
  }
  return GradedPoly(table);
}

GradedPoly BSORing::euler() const {
  if (!has_euler()) return GradedPoly(table);
  Exponents e(table->size(), 0);
  e.back() = 1;
  return GradedPoly::monomial(table, e);
}

BasisMonomial::BasisMonomial(int n_, unsigned a_, std::vector<unsigned> b_) : n(n_), a(a_), b(std::move(b_)) {
  if (n < 1) throw DomainError("basis monomial: n must be >= 1");
  if (b.size() != static_cast<std::size_t>(n - 1))
    throw DomainError("basis monomial: expected " + std::to_string(n - 1) + " Pontrjagin exponents");
}

int BasisMonomial::degree() const {
  int deg = 2 * n * static_cast<int>(a);
  for (std::size_t i = 0; i < b.size(); ++i) deg += 4 * static_cast<int>(i + 1) * static_cast<int>(b[i]);
  return deg;
}

unsigned BasisMonomial::pontrjagin_length() const {
  unsigned s = 0;
  for (unsigned v : b) s += v;
  return s;
}

bool BasisMonomial::is_one() const { return a == 0 && pontrjagin_length() == 0; }

std::string BasisMonomial::to_string() const {
  std::string out;
  auto put = [&](const std::string& atom, unsigned k) {
    if (k == 0) return;
    if (!out.empty()) out += '*';
    out += atom;
    if (k > 1) out += '^' + std::to_string(k);
  };
  put("e", a);
  for (std::size_t i = 0; i < b.size(); ++i) put("p" + std::to_string(i + 1), b[i]);
  return out.empty() ? "1" : out;
}

GradedPoly BasisMonomial::to_poly(const BSORing& ring) const {
  if (ring.d != 2 * n) throw DomainError("basis monomial evaluated in the wrong ring");
  Exponents e(ring.table->size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) e[i] = b[i];
  e.back() = a;
  return GradedPoly::monomial(ring.table, e);
}

BasisMonomial BasisMonomial::times_euler(unsigned k) const { return BasisMonomial(n, a + k, b); }

BasisMonomial pontrjagin_monomial(int n, const std::vector<unsigned>& exps) {
  if (exps.size() != static_cast<std::size_t>(n)) throw DomainError("pontrjagin_monomial: need n exponents");
  return BasisMonomial(n, 2 * exps.back(), std::vector<unsigned>(exps.begin(), exps.end() - 1));
}

std::vector<BasisMonomial> enumerate_basis(int n, int max_degree) {
  if (n < 1) throw DomainError("enumerate_basis: n must be >= 1");
  std::vector<BasisMonomial> out;
  std::vector<unsigned> b(static_cast<std::size_t>(n - 1), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int deg) {
    if (idx == b.size()) {
      for (unsigned a = 0; deg + 2 * n * static_cast<int>(a) <= max_degree; ++a) out.emplace_back(n, a, b);
      return;
    }
    const int step = 4 * static_cast<int>(idx + 1);
    for (unsigned k = 0; deg + step * static_cast<int>(k) <= max_degree; ++k) {
      b[idx] = k;
      rec(idx + 1, deg + step * static_cast<int>(k));
    }
    b[idx] = 0;
  };
  if (max_degree >= 0) rec(0, 0);
  // canonical order: degree, then exponent vector (p1..p_{n-1}, e) lexicographically
  std::sort(out.begin(), out.end(), [](const BasisMonomial& x, const BasisMonomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    std::vector<unsigned> ex = x.b, ey = y.b;
    ex.push_back(x.a);
    ey.push_back(y.a);
    return ex < ey;
  });
  return out;
}

TablePtr pontrjagin_table(int n) { return weighted_table("p", n); }

namespace {

// Weight-4i part of prod_{j <= nv} f(x_j) in elementary symmetric functions of the squares.
GradedPoly symmetric_component(const EvenPowerSeries& f, int nv, int i) {
  const GradedPoly expanded = product_expand(f, nv, 4 * i);
  return to_elementary(homogeneous_component(expanded, 4 * i));
}

// Pads a polynomial over s1..s_m into p1..p_n (m <= n).
GradedPoly widen(const GradedPoly& x, const TablePtr& target) {
  GradedPoly out(target);
  for (const auto& [m, c] : x.terms()) {
    Exponents e(target->size(), 0);
    std::copy(m.exps.begin(), m.exps.end(), e.begin());
    out.add_term(e, c);
  }
  return out;
}

}  // namespace

LTildeClass l_tilde(int i, int n) {
  if (n < 1) throw DomainError("l_tilde: n must be >= 1");
  if (i < 0) throw DomainError("l_tilde: i must be >= 0");
  const TablePtr pt = pontrjagin_table(n);
  const Rational two_n = pow(Rational(2), n);
  if (i == 0) return {0, n, GradedPoly::constant(pt, two_n)};
  // Extra variables beyond 2i only rescale by the constant term 2.
  const int nv = std::min(n, 2 * i);
  GradedPoly poly = widen(symmetric_component(tanh_quotient_series(2 * i), nv, i), pt);
  poly *= pow(Rational(2), n - nv);
  return {i, n, std::move(poly)};
}

GradedPoly l_classical(int i) {
  if (i < 1) throw DomainError("l_classical: i must be >= 1");
  return symmetric_component(classical_l_series(2 * i), i, i).relabel(pontrjagin_table(i));
}

Rational l_tilde_leading_coefficient(int i, int n) {
  return pow(Rational(2), n) * (pow(Rational(2), 2 * i - 1) - 1) * bernoulli(i) /
         Rational(factorial(static_cast<unsigned>(2 * i)));
}

RingMap p_to_ltilde_basis(int n, int max_i) {
  if (max_i < 1 || max_i > n) throw DomainError("p_to_ltilde_basis: need 1 <= max_i <= n");
  const TablePtr lt = weighted_table("Lt", max_i);
  const TablePtr pt = pontrjagin_table(n);
  std::vector<GradedPoly> images;
  for (int i = 1; i <= max_i; ++i) {
    const GradedPoly L = l_tilde(i, n).poly;
    Exponents pi(pt->size(), 0);
    pi[static_cast<std::size_t>(i - 1)] = 1;
    const Rational lead = L.coefficient(pi);
    if (lead == 0) throw std::logic_error("p_to_ltilde_basis: vanishing leading coefficient");
    GradedPoly rest = L - GradedPoly::monomial(pt, pi, lead);
    // rest only involves p1..p_{i-1}, whose images are already known
    GradedPoly substituted(lt);
    for (const auto& [m, c] : rest.terms()) {
      GradedPoly term = GradedPoly::constant(lt, c);
      for (std::size_t j = 0; j < m.exps.size(); ++j)
        if (m.exps[j] != 0) term = term * pow(images.at(j), m.exps[j]);
      substituted += term;
    }
    GradedPoly image = GradedPoly::generator(lt, "Lt" + std::to_string(i)) - substituted;
    image *= Rational(1) / lead;
    images.push_back(std::move(image));
  }
  return RingMap(pontrjagin_table(max_i), lt, std::move(images));
}

RingMap ltilde_to_p(int n, int max_i) {
  std::vector<GradedPoly> images;
  for (int j = 1; j <= max_i; ++j) images.push_back(l_tilde(j, n).poly);
  return RingMap(weighted_table("Lt", max_i), pontrjagin_table(n), std::move(images));
}

namespace {

GradedPoly lift(const GradedPoly& x, const TablePtr& product, std::size_t offset) {
  GradedPoly out(product);
  for (const auto& [m, c] : x.terms()) {
    Exponents e(product->size(), 0);
    std::copy(m.exps.begin(), m.exps.end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
    out.add_term(e, c);
  }
  return out;
}

}  // namespace

WhitneySum whitney_p(int d1, int d2) {
  BSORing first = bso_ring(d1, "'");
  BSORing second = bso_ring(d2, "''");
  BSORing total = bso_ring(d1 + d2);
  std::vector<Generator> gens = first.table->generators();
  for (const auto& g : second.table->generators()) gens.push_back(g);
  const TablePtr product = make_table(std::move(gens));
  const std::size_t offset = first.table->size();

  GradedPoly p1 = GradedPoly(product), p2 = GradedPoly(product);
  for (int k = 0; 2 * k <= d1; ++k) p1 += lift(first.pontrjagin(k), product, 0);
  for (int k = 0; 2 * k <= d2; ++k) p2 += lift(second.pontrjagin(k), product, offset);
  const GradedPoly whole = p1 * p2;

  std::vector<GradedPoly> images;
  for (int k = 1; k <= total.pontrjagin_count(); ++k) images.push_back(homogeneous_component(whole, 4 * k));
  if (total.has_euler()) {
    if (first.has_euler() && second.has_euler())
      images.push_back(lift(first.euler(), product, 0) * lift(second.euler(), product, offset));
    else
      images.push_back(GradedPoly(product));  // odd-rank Euler classes vanish rationally
  }
  RingMap map(total.table, product, std::move(images));
  return WhitneySum{std::move(total), std::move(first), std::move(second), product, std::move(map)};
}

}  // namespace taut
