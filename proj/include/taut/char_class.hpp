#pragma once

#include <string>
#include <vector>

#include "taut/graded_poly.hpp"

namespace taut {

/// H*(BSO(d); Q): p1..p_{(d-1)/2} for d odd, p1..p_{d/2-1}, e for d even.
/// The top Pontrjagin class of an even rank is the alias p_{d/2} = e^2 and is
/// never a stored generator.
struct BSORing {
  int d = 0;
  TablePtr table;

  bool has_euler() const noexcept { return d % 2 == 0; }
  /// Number of Pontrjagin generators.
  int pontrjagin_count() const noexcept { return (d - 1) / 2; }
  /// p_k as an element of the ring: a generator, e^2 for k = d/2, zero beyond the rank.
  GradedPoly pontrjagin(int k) const;
  GradedPoly euler() const;
};

/// Throws DomainError for d < 2.
BSORing bso_ring(int d, const std::string& suffix = "");

/// e^a * p1^b1 ... p_{n-1}^b_{n-1} in H*(BSO(2n); Q).
struct BasisMonomial {
  int n = 1;
  unsigned a = 0;
  std::vector<unsigned> b;  // size n - 1

  BasisMonomial() = default;
  BasisMonomial(int n_, unsigned a_, std::vector<unsigned> b_);

  int degree() const;
  /// |I| = b_1 + ... + b_{n-1}.
  unsigned pontrjagin_length() const;
  bool is_one() const;
  std::string to_string() const;  // "1", "e", "e^3*p1*p2^2", ...
  /// The class as an element of bso_ring(2n).
  GradedPoly to_poly(const BSORing& ring) const;
  BasisMonomial times_euler(unsigned k = 1) const;

  auto operator<=>(const BasisMonomial&) const = default;
};

/// Monomial p_I with I over p1..p_n, folding p_n to e^2.
BasisMonomial pontrjagin_monomial(int n, const std::vector<unsigned>& exps_1_to_n);

/// All basis monomials of degree <= max_degree, ordered by degree then exponents.
std::vector<BasisMonomial> enumerate_basis(int n, int max_degree);

struct LTildeClass {
  int i = 0;
  int n = 0;
  GradedPoly poly;  // over pontrjagin_table(n)
};

/// Table p1..pn, p_k of degree 4k.
TablePtr pontrjagin_table(int n);

/// Modified Hirzebruch class from prod x_j / tanh(x_j / 2), as a polynomial in p1..pn.
LTildeClass l_tilde(int i, int n);

/// Classical Hirzebruch polynomial L_i in p1..p_i.
GradedPoly l_classical(int i);

/// Expected coefficient of p_i in l_tilde(i, n): 2^n (2^{2i-1} - 1) B_i / (2i)!.
Rational l_tilde_leading_coefficient(int i, int n);

/// Map from pontrjagin_table(max_i) to the table Lt1..Lt_{max_i} expressing each p_i
/// through the modified classes.
RingMap p_to_ltilde_basis(int n, int max_i);

/// The map Lt_j -> l_tilde(j, n) from the Lt table to pontrjagin_table(n).
RingMap ltilde_to_p(int n, int max_i);

/// Restriction along the block sum BSO(d1) x BSO(d2) -> BSO(d1 + d2).
/// Factor generators are suffixed ' and ''.
struct WhitneySum {
  BSORing total;
  BSORing first;
  BSORing second;
  TablePtr product_table;
  RingMap map;
};

WhitneySum whitney_p(int d1, int d2);

}  // namespace taut
