#pragma once

#include "taut/exact_arith.hpp"
#include "taut/graded_poly.hpp"

namespace taut {

/// Table x1..xn, each of degree 2.
TablePtr variable_table(int n_vars);

/// Table with the given prefix and indices 1..n, generator i of degree 4i
/// (elementary symmetric functions of the squares, or Pontrjagin classes).
TablePtr weighted_table(const std::string& prefix, int n);

/// Expansion of prod_{i=1}^{n_vars} f(x_i) keeping all terms of degree <= max_weight
/// (x_i has degree 2). Throws DomainError if f is truncated below max_weight.
GradedPoly product_expand(const EvenPowerSeries& f, int n_vars, int max_weight);

/// The map sigma_i -> sigma_{i,n}(x_1^2, ..., x_n^2) from weighted_table("s", n)
/// to variable_table(n).
RingMap elementary_substitution(int n_vars);

/// Rewrites a symmetric polynomial in x_1^2..x_n^2 in the elementary symmetric
/// functions s1..sn of the squares, by leading-term subtraction.
///
/// Throws DomainError if an odd exponent occurs, or if the input is not
/// symmetric; the message names a witness transposition "(i j)".
GradedPoly to_elementary(const GradedPoly& s);

}  // namespace taut
