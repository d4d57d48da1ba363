#include "taut/taut_ring.hpp"

#include <functional>
#include <optional>

#include "taut/errors.hpp"

namespace taut {

int default_degree_bound(int n) { return 4 * n * 6; }

namespace {

std::string e_p(int j) { return "e*p" + std::to_string(j); }

// kappa of e*p_j (j <= n, p_n = e^2) as a basis monomial
BasisMonomial e_times_p(int n, int j) {
  std::vector<unsigned> exps(static_cast<std::size_t>(n), 0);
  exps[static_cast<std::size_t>(j - 1)] = 1;
  return pontrjagin_monomial(n, exps).times_euler();
}

BasisMonomial p_only(int n, int j) {
  std::vector<unsigned> exps(static_cast<std::size_t>(n), 0);
  exps[static_cast<std::size_t>(j - 1)] = 1;
  return pontrjagin_monomial(n, exps);
}

}  // namespace

TautPresentation::TautPresentation(int n, int g, Flavor flavor) : n_(n), g_(g), flavor_(flavor), chi_(2 - 2 * g) {
  if (n < 1) throw DomainError("presentation: n must be >= 1");
  if (g < 0) throw DomainError("presentation: genus must be >= 0");
  const bool odd = n % 2 == 1;
  if (flavor == Flavor::pointed && g == 0)
    throw UnsupportedCase(
        "pointed presentation at genus 0 is not defined: the rewrite c = k[e c] / chi is refuted for c = e "
        "in the pointed sphere model (run `audit --genus 0` to see the witness)");
  if (flavor == Flavor::disc && !odd) throw UnsupportedParity("disc presentation requires n odd");
  if (flavor != Flavor::disc && g >= 1 && !odd)
    throw UnsupportedParity("presentations for genus >= 1 require n odd");

  std::vector<Generator> table;
  auto add = [&](LeafKind kind, BasisMonomial mono, std::string name, int degree) {
    table.push_back({name, degree});
    gens_.push_back({kind, std::move(mono), std::move(name), degree});
  };
  if (flavor == Flavor::disc) {
    // no generators
  } else if (g == 0) {
    for (int j = 1; j <= n; ++j) add(LeafKind::kappa, e_times_p(n, j), "K[" + e_p(j) + "]", 4 * j);
  } else if (g == 1) {
    if (flavor == Flavor::pointed)
      for (int j = 1; j < n; ++j) add(LeafKind::cls, p_only(n, j), "c[p" + std::to_string(j) + "]", 4 * j);
  } else {
    for (int j = 1; j < n; ++j) add(LeafKind::kappa, e_times_p(n, j), "K[" + e_p(j) + "]", 4 * j);
  }
  table_ = make_table(std::move(table));
}

GradedPoly TautPresentation::generator_power(std::size_t idx, unsigned k) const {
  Exponents e(table_->size(), 0);
  e.at(idx) = k;
  return GradedPoly::monomial(table_, e);
}

GradedPoly TautPresentation::reduce_kappa(const BasisMonomial& c) const {
  const GradedPoly zero(table_);
  const int deg = c.degree();
  if (deg < 2 * n_) return zero;
  if (flavor_ == Flavor::disc && deg > 2 * n_) return zero;
  if (c.a % 2 == 0) return zero;  // pure Pontrjagin classes, with e^2 = p_n
  if (g_ == 1) return zero;
  const unsigned k = (c.a - 1) / 2;  // c = e * p_n^k * p_I
  if (g_ >= 2 && k > 0) return zero;

  // kappa_{e p_J} -> chi^{1-|J|} prod K[e p_j]^{J_j}
  std::vector<unsigned> J = c.b;
  J.push_back(k);
  unsigned length = 0;
  GradedPoly out = GradedPoly::constant(table_, 1);
  for (std::size_t j = 0; j < J.size(); ++j) {
    if (J[j] == 0) continue;
    length += J[j];
    out = out * generator_power(j, J[j]);
  }
  out *= pow(chi_, 1 - static_cast<int>(length));
  return out;
}

GradedPoly TautPresentation::reduce_class(const BasisMonomial& c) const {
  if (flavor_ != Flavor::pointed) throw DomainError("class leaves only exist in the pointed flavor");
  if (g_ == 1) {
    if (c.a != 0) return GradedPoly(table_);
    Exponents e(c.b.begin(), c.b.end());
    return GradedPoly::monomial(table_, e);
  }
  // chi c = kappa_{e c}
  GradedPoly out = reduce_kappa(c.times_euler());
  out *= Rational(1) / chi_;
  return out;
}

GradedPoly TautPresentation::reduce(const node::Leaf& leaf) const {
  if (leaf.mono.n != n_) throw DomainError("leaf for a different n");
  return leaf.kind == LeafKind::kappa ? reduce_kappa(leaf.mono) : reduce_class(leaf.mono);
}

GradedPoly normal_form(const KappaExpr& x, const TautPresentation& pres, int max_degree) {
  if (x.n() != pres.n()) throw DomainError("expression and presentation have different n");
  if (x.has_class_leaves() && pres.flavor() != Flavor::pointed)
    throw DomainError("class leaves require the pointed flavor");
  const int bound = max_degree < 0 ? default_degree_bound(pres.n()) : max_degree;
  return evaluate(x, pres.table(), [&](const node::Leaf& leaf) { return pres.reduce(leaf); }, bound);
}

int krull_dimension(const TautPresentation& pres) { return static_cast<int>(pres.generators().size()); }

GradedPoly model_eval(const KappaExpr& x, const BundleModel& model, int max_degree) {
  if (x.n() != model.n()) throw DomainError("expression and model have different n");
  if (x.has_class_leaves() && !model.pointed())
    throw DomainError("class leaves need a pointed model, got " + model.label());
  const int bound = max_degree < 0 ? default_degree_bound(model.n()) : max_degree;
  return evaluate(
      x, model.target(),
      [&](const node::Leaf& leaf) { return leaf.kind == LeafKind::kappa ? model.kappa(leaf.mono) : model.cls(leaf.mono); },
      bound);
}

GradedPoly model_eval(const GradedPoly& normal, const TautPresentation& pres, const BundleModel& model) {
  std::vector<GradedPoly> images;
  for (const auto& g : pres.generators())
    images.push_back(g.kind == LeafKind::kappa ? model.kappa(g.mono) : model.cls(g.mono));
  return apply_map(RingMap(pres.table(), model.target(), std::move(images)), normal);
}

std::string to_string(Verdict v) { return v == Verdict::verified ? "verified" : "refuted"; }

AuditReport audit(const KappaExpr& relation, const BundleModel& model, const std::string& family, int max_degree) {
  GradedPoly residual = model_eval(relation, model, max_degree);
  const Verdict v = residual.is_zero() ? Verdict::verified : Verdict::refuted;
  return AuditReport{family, relation.to_string(), model.kind(), model.label(), model.n(), model.genus(), v,
                     std::move(residual)};
}

namespace {

// All exponent vectors over `vars` indices with 1 <= total <= max_len.
std::vector<std::vector<unsigned>> multi_indices(std::size_t vars, unsigned max_len) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(vars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == vars) {
      if (left < max_len) out.push_back(cur);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      cur[i] = k;
      rec(i + 1, left - k);
    }
    cur[i] = 0;
  };
  rec(0, max_len);
  return out;
}

// sum of q_i * x_i with unit coefficients and zero terms dropped, signs folded
// into the sum so the text reads "a - 2*b" rather than "a + (-2)*b"
KappaExpr combine(int n, const std::vector<std::pair<Rational, KappaExpr>>& terms) {
  std::optional<KappaExpr> acc;
  for (const auto& [q, x] : terms) {
    if (q == 0) continue;
    const Rational mag = abs(q);
    const KappaExpr t = mag == 1 ? x : KappaExpr::constant(n, mag) * x;
    if (!acc)
      acc = q < 0 ? -t : t;
    else
      acc = q < 0 ? *acc - t : *acc + t;
  }
  return acc ? *acc : KappaExpr::constant(n, 0);
}

}  // namespace

std::vector<AuditReport> builtin_relation_suite(int n, int g, int max_degree) {
  if (n < 1) throw DomainError("relation suite: n must be >= 1");
  if (g < 0) throw DomainError("relation suite: genus must be >= 0");
  std::vector<BundleModel> closed, pointed;
  if (g == 0) {
    closed.push_back(BundleModel::sphere(n));
    pointed.push_back(BundleModel::pointed_sphere(n));
  }
  if (n >= 2) {
    closed.push_back(BundleModel::liegroup(n, g));
    pointed.push_back(BundleModel::pointed_liegroup(n, g));
  }
  const Rational chi(2 - 2 * g);
  auto K = [](const BasisMonomial& c) { return KappaExpr::kappa(c); };
  auto C = [](const BasisMonomial& c) { return KappaExpr::cls(c); };
  const BasisMonomial one(n, 0, std::vector<unsigned>(static_cast<std::size_t>(n - 1), 0));
  const BasisMonomial e = one.times_euler();
  const BasisMonomial e2 = one.times_euler(2);

  std::vector<std::pair<std::string, KappaExpr>> pointed_rel, closed_rel;
  const auto basis = enumerate_basis(n, max_degree);
  for (const auto& c : basis) {
    pointed_rel.emplace_back("euler-product-relation", combine(n, {{chi * chi, C(c)},
                                                                   {-chi, K(c.times_euler())},
                                                                   {-chi, C(e) * K(c)},
                                                                   {1, K(e2) * K(c)}}));
  }
  pointed_rel.emplace_back("euler-square-relation", combine(n, {{(chi - 2) * chi, C(e)}, {1, K(e2)}}));
  for (const auto& c : basis)
    pointed_rel.emplace_back("pointed-class-rewrite", combine(n, {{chi, C(c)}, {-1, K(c.times_euler())}}));
  for (unsigned j = 1; j <= 3; ++j) pointed_rel.emplace_back("euler-class-power", C(e).pow(j));

  const std::size_t vars = static_cast<std::size_t>(g == 0 ? n : n - 1);
  for (const auto& I : multi_indices(vars, 4)) {
    std::vector<unsigned> full(I);
    full.resize(static_cast<std::size_t>(n), 0);
    const BasisMonomial epI = pontrjagin_monomial(n, full).times_euler();
    int length = 0;
    std::optional<KappaExpr> prod;
    for (std::size_t j = 0; j < I.size(); ++j) {
      if (I[j] == 0) continue;
      length += static_cast<int>(I[j]);
      const KappaExpr f = K(e_times_p(n, static_cast<int>(j) + 1)).pow(I[j]);
      prod = prod ? *prod * f : f;
    }
    closed_rel.emplace_back("kappa-product", combine(n, {{pow(chi, length - 1), K(epI)}, {-1, *prod}}));
    closed_rel.emplace_back("kappa-product-printed", combine(n, {{pow(chi, length), K(epI)}, {-1, *prod}}));
  }
  for (unsigned k = 1; k <= 3; ++k) closed_rel.emplace_back("odd-euler-kappa-power", K(one.times_euler(2 * k + 1)).pow(2));

  std::vector<AuditReport> out;
  for (const auto& model : closed)
    for (const auto& [family, rel] : closed_rel) out.push_back(audit(rel, model, family));
  for (const auto& model : pointed)
    for (const auto& [family, rel] : pointed_rel) out.push_back(audit(rel, model, family));
  return out;
}

}  // namespace taut
