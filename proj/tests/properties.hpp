#pragma once

#include <string>

#include "taut/bundle_models.hpp"
#include "taut/sym_calc.hpp"
#include "taut/taut_ring.hpp"
#include "test_util.hpp"

// Randomised law checks. Each returns the number of failing cases out of `cases`.
namespace taut::testing {

inline int check_apply_map_homomorphism(Rng& rng, int cases) {
  int failures = 0;
  auto src = make_table({{"a", 4}, {"b", 6}, {"c", 8}});
  auto dst = make_table({{"x", 2}, {"y", 4}});
  for (int k = 0; k < cases; ++k) {
    std::vector<GradedPoly> images;
    for (const auto& g : src->generators()) images.push_back(random_homogeneous(rng, dst, g.degree, 3));
    RingMap f(src, dst, images);
    const auto a = random_poly(rng, src, 16), b = random_poly(rng, src, 16);
    const auto q = random_rational(rng);
    if (apply_map(f, a * b) != apply_map(f, a) * apply_map(f, b)) ++failures;
    if (apply_map(f, a + q * b) != apply_map(f, a) + q * apply_map(f, b)) ++failures;
    if (apply_map(f, GradedPoly::constant(src, q)) != GradedPoly::constant(dst, q)) ++failures;
  }
  return failures;
}

/// normal_form(x*y) = nf(x) nf(y), nf(x + y) = nf(x) + nf(y), and nf is idempotent
/// on its own rendered output.
inline int check_normal_form_laws(Rng& rng, int cases) {
  int failures = 0;
  struct Setting {
    int n, g;
    Flavor f;
  };
  const Setting settings[] = {{3, 0, Flavor::closed},  {3, 2, Flavor::closed},  {3, 1, Flavor::closed},
                              {3, 2, Flavor::pointed}, {3, 1, Flavor::pointed}, {5, 3, Flavor::closed},
                              {3, 2, Flavor::disc},    {2, 0, Flavor::closed}};
  for (int k = 0; k < cases; ++k) {
    const auto& s = settings[static_cast<std::size_t>(k) % std::size(settings)];
    const TautPresentation pres(s.n, s.g, s.f);
    const bool pointed = s.f == Flavor::pointed;
    const auto x = random_kappa_expr(rng, s.n, 16, pointed), y = random_kappa_expr(rng, s.n, 16, pointed);
    const auto nx = normal_form(x, pres), ny = normal_form(y, pres);
    if (normal_form(x * y, pres) != nx * ny) ++failures;
    if (normal_form(x + y, pres) != nx + ny) ++failures;
    if (normal_form(x - y, pres) != nx - ny) ++failures;
    if (normal_form(parse(to_string(nx), s.n, s.f), pres) != nx) ++failures;
  }
  return failures;
}

inline int check_projection_formula(Rng& rng, int cases) {
  int failures = 0;
  for (int k = 0; k < cases; ++k) {
    const GysinContext ctx(1 + k % 5);
    const auto x = random_poly(rng, ctx.base.table, 24), y = random_poly(rng, ctx.total.table, 24);
    if (gysin_push(ctx, apply_map(ctx.pullback, x) * y) != x * gysin_push(ctx, y)) ++failures;
  }
  return failures;
}

inline int check_parity_split(Rng& rng, int cases) {
  int failures = 0;
  auto t = make_table({{"p1", 4}, {"e", 6}, {"p2", 8}});
  const auto e = GradedPoly::generator(t, "e");
  for (int k = 0; k < cases; ++k) {
    const auto x = random_poly(rng, t, 30, 8);
    const auto s = parity_split(x, "e");
    if (s.even_part + e * s.odd_cofactor != x) ++failures;
    for (const auto* part : {&s.even_part, &s.odd_cofactor})
      for (const auto& [m, c] : part->terms())
        if (m.exps[1] % 2 != 0) ++failures;
  }
  return failures;
}

inline int check_symmetric_round_trip(Rng& rng, int cases) {
  int failures = 0;
  for (int k = 0; k < cases; ++k) {
    const int n = 1 + k % 4;
    const auto sub = elementary_substitution(n);
    const auto y = random_poly(rng, sub.source(), 4 * (n + 2));
    if (to_elementary(apply_map(sub, y)) != y) ++failures;
  }
  return failures;
}

}  // namespace taut::testing
