#include "taut/bundle_models.hpp"

#include "taut/errors.hpp"

namespace taut {

namespace {

RingMap sphere_pullback(const BSORing& base, const BSORing& total, int n) {
  std::vector<GradedPoly> images;
  for (int i = 1; i <= n; ++i) images.push_back(total.pontrjagin(i));  // p_n -> e^2
  return RingMap(base.table, total.table, std::move(images));
}

}  // namespace

GysinContext::GysinContext(int n_)
    : n(n_), total(bso_ring(2 * n_)), base(bso_ring(2 * n_ + 1)), pullback(sphere_pullback(base, total, n_)) {}

GradedPoly gysin_push(const GysinContext& ctx, const GradedPoly& x) {
  if (!(*x.table() == *ctx.total.table)) throw DomainError("gysin_push: element not in the total ring");
  const auto split = parity_split(x, "e");
  GradedPoly out(ctx.base.table);
  for (const auto& [m, c] : split.odd_cofactor.terms()) {
    // total exps (p1..p_{n-1}, e) -> base exps (p1..p_n) with e^2 = p_n
    Exponents e(m.exps.begin(), m.exps.end());
    e.back() /= 2;
    out.add_term(e, 2 * c);
  }
  return out;
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::sphere: return "sphere";
    case ModelKind::liegroup: return "liegroup";
    case ModelKind::pointed_sphere: return "pointed_sphere";
    case ModelKind::pointed_liegroup: return "pointed_liegroup";
  }
  return "?";
}

ModelKind parse_model_kind(const std::string& name) {
  for (auto k : {ModelKind::sphere, ModelKind::liegroup, ModelKind::pointed_sphere, ModelKind::pointed_liegroup})
    if (to_string(k) == name) return k;
  throw DomainError("unknown model '" + name + "'");
}

BundleModel::BundleModel(ModelKind kind, int n, int g) : kind_(kind), n_(n), g_(g), chi_(2 - 2 * g) {
  if (n < 1) throw DomainError("model: n must be >= 1");
  if (g < 0) throw DomainError("model: genus must be >= 0");
  switch (kind) {
    case ModelKind::sphere:
    case ModelKind::pointed_sphere:
      if (g != 0) throw DomainError("sphere model has genus 0");
      gysin_.emplace(n);
      target_ = kind == ModelKind::sphere ? gysin_->base.table : gysin_->total.table;
      break;
    case ModelKind::liegroup:
    case ModelKind::pointed_liegroup:
      if (n < 2) throw DomainError("Lie-group model needs n >= 2");
      whitney_.emplace(whitney_p(n, n));
      target_ = whitney_->product_table;
      break;
  }
}

BundleModel BundleModel::sphere(int n) { return BundleModel(ModelKind::sphere, n, 0); }
BundleModel BundleModel::pointed_sphere(int n) { return BundleModel(ModelKind::pointed_sphere, n, 0); }
BundleModel BundleModel::liegroup(int n, int g) { return BundleModel(ModelKind::liegroup, n, g); }
BundleModel BundleModel::pointed_liegroup(int n, int g) { return BundleModel(ModelKind::pointed_liegroup, n, g); }
BundleModel BundleModel::make(ModelKind kind, int n, int g) { return BundleModel(kind, n, g); }

std::string BundleModel::label() const {
  std::string out = to_string(kind_) + "(n=" + std::to_string(n_);
  if (kind_ == ModelKind::liegroup || kind_ == ModelKind::pointed_liegroup) out += ",g=" + std::to_string(g_);
  return out + ")";
}

void BundleModel::check(const BasisMonomial& c) const {
  if (c.n != n_) throw DomainError("basis monomial for n=" + std::to_string(c.n) + " used in a model with n=" +
                                   std::to_string(n_));
}

GradedPoly BundleModel::kappa(const BasisMonomial& c) const {
  check(c);
  if (gysin_) {
    GradedPoly down = gysin_push(*gysin_, c.to_poly(gysin_->total));
    return kind_ == ModelKind::sphere ? down : apply_map(gysin_->pullback, down);
  }
  // pi_!(1) = 0 and pi_!(e) = chi; e^2 = p_n is pulled back from the base
  if (c.a % 2 == 0) return GradedPoly(target_);
  const BasisMonomial rest(n_, c.a - 1, c.b);
  return chi_ * apply_map(whitney_->map, rest.to_poly(whitney_->total));
}

GradedPoly BundleModel::cls(const BasisMonomial& c) const {
  check(c);
  if (!pointed()) throw DomainError("model " + label() + " has no section classes");
  if (gysin_) return c.to_poly(gysin_->total);  // vertical tangent bundle is the tautological one
  return apply_map(whitney_->map, c.to_poly(whitney_->total));
}

GradedPoly sphere_kappa(int n, const BasisMonomial& c) { return BundleModel::sphere(n).kappa(c); }

GradedPoly liegroup_kappa(int n, int g, const BasisMonomial& c) { return BundleModel::liegroup(n, g).kappa(c); }

GradedPoly pointed_class(const BundleModel& model, const BasisMonomial& c) { return model.cls(c); }

}  // namespace taut
