#pragma once

#include <optional>
#include <string>

#include "taut/char_class.hpp"

namespace taut {

/// The genus-zero sphere bundle BSO(2n) -> BSO(2n+1) as a ring-level object:
/// total ring Q[p1..p_{n-1}, e], base ring Q[p1..pn], pullback p_i -> p_i, p_n -> e^2.
struct GysinContext {
  explicit GysinContext(int n);

  int n;
  BSORing total;
  BSORing base;
  RingMap pullback;
};

/// Fibre integration: x = F + e*G  |->  2 * G with e^2 read as p_n.
GradedPoly gysin_push(const GysinContext& ctx, const GradedPoly& x);

enum class ModelKind { sphere, liegroup, pointed_sphere, pointed_liegroup };

std::string to_string(ModelKind kind);
/// Accepts the names produced by to_string(ModelKind); throws DomainError otherwise.
ModelKind parse_model_kind(const std::string& name);

/// An evaluation target for kappa classes (and, for pointed variants, for the
/// classes c of the vertical tangent bundle at the section).
class BundleModel {
 public:
  static BundleModel sphere(int n);
  static BundleModel pointed_sphere(int n);
  /// SO(n) x SO(n) acting on W_g; needs n >= 2 and g >= 0.
  static BundleModel liegroup(int n, int g);
  static BundleModel pointed_liegroup(int n, int g);
  static BundleModel make(ModelKind kind, int n, int g);

  ModelKind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  int genus() const noexcept { return g_; }
  const Rational& chi() const noexcept { return chi_; }
  bool pointed() const noexcept { return kind_ == ModelKind::pointed_sphere || kind_ == ModelKind::pointed_liegroup; }
  const TablePtr& target() const noexcept { return target_; }
  /// e.g. "liegroup(n=3,g=2)"
  std::string label() const;

  /// Value of kappa_c; homogeneous of degree deg(c) - 2n (zero when negative).
  GradedPoly kappa(const BasisMonomial& c) const;
  /// Value of c at the section; throws DomainError for non-pointed models.
  GradedPoly cls(const BasisMonomial& c) const;

 private:
  BundleModel(ModelKind kind, int n, int g);
  void check(const BasisMonomial& c) const;

  ModelKind kind_;
  int n_;
  int g_;
  Rational chi_;
  TablePtr target_;
  std::optional<GysinContext> gysin_;
  std::optional<WhitneySum> whitney_;
};

/// kappa_c in the sphere model, valued in Q[p1..pn].
GradedPoly sphere_kappa(int n, const BasisMonomial& c);

/// kappa_c in the Lie-group model over BSO(n) x BSO(n): chi * c/e on V1 + V2 when
/// the Euler exponent of c is odd, zero otherwise.
GradedPoly liegroup_kappa(int n, int g, const BasisMonomial& c);

/// Class c at the section of a pointed model.
GradedPoly pointed_class(const BundleModel& model, const BasisMonomial& c);

}  // namespace taut
