#pragma once

#include <string>
#include <vector>

#include "taut/bundle_models.hpp"
#include "taut/kappa_expr.hpp"

namespace taut {

/// Degree cap used when none is given: 24n.
int default_degree_bound(int n);

struct PresentationGenerator {
  LeafKind kind;
  BasisMonomial mono;  // K[e*p_j] is kappa of e*p_j; c[p_j] is the class p_j
  std::string name;
  int degree;
};

/// Free polynomial presentation of a tautological ring modulo its nilradical,
/// together with the leaf rewriting rules that reduce any expression into it.
class TautPresentation {
 public:
  /// Throws UnsupportedParity (closed/pointed with g >= 1 and disc need n odd) and
  /// UnsupportedCase (pointed flavor at genus 0).
  TautPresentation(int n, int g, Flavor flavor);

  int n() const noexcept { return n_; }
  int genus() const noexcept { return g_; }
  Flavor flavor() const noexcept { return flavor_; }
  const Rational& chi() const noexcept { return chi_; }
  const std::vector<PresentationGenerator>& generators() const noexcept { return gens_; }
  const TablePtr& table() const noexcept { return table_; }

  GradedPoly reduce(const node::Leaf& leaf) const;

 private:
  GradedPoly reduce_kappa(const BasisMonomial& c) const;
  GradedPoly reduce_class(const BasisMonomial& c) const;
  GradedPoly generator_power(std::size_t idx, unsigned k) const;

  int n_;
  int g_;
  Flavor flavor_;
  Rational chi_;
  std::vector<PresentationGenerator> gens_;
  TablePtr table_;
};

/// Unique representative of x in the presentation's free polynomial ring.
/// `max_degree` < 0 selects default_degree_bound(n).
GradedPoly normal_form(const KappaExpr& x, const TautPresentation& pres, int max_degree = -1);

int krull_dimension(const TautPresentation& pres);

/// Evaluates an expression in a bundle model (kappa and class leaves substituted).
GradedPoly model_eval(const KappaExpr& x, const BundleModel& model, int max_degree = -1);

/// Evaluates a normal form (a polynomial in the presentation's generators) in a model.
GradedPoly model_eval(const GradedPoly& normal, const TautPresentation& pres, const BundleModel& model);

enum class Verdict { verified, refuted };
std::string to_string(Verdict v);

struct AuditReport {
  std::string family;
  std::string relation;  // rendered KappaExpr
  ModelKind model;
  std::string model_label;
  int n;
  int g;
  Verdict verdict;
  GradedPoly witness;  // zero iff verified
};

/// Substitutes the model's rules into the relation and reports the residual.
/// Throws DomainError when n differs or class leaves meet a non-pointed model.
AuditReport audit(const KappaExpr& relation, const BundleModel& model, const std::string& family = "",
                  int max_degree = -1);

/// Instantiates the displayed relations for every basis monomial of degree
/// <= max_degree and audits each in every applicable model:
///   euler-product-relation   chi^2 c - chi k[e c] - chi c[e] k[c] + k[e^2] k[c]   (pointed)
///   euler-square-relation    (chi - 2) chi c[e] + k[e^2]                          (pointed)
///   pointed-class-rewrite    chi c[c] - k[e c]                                    (pointed)
///   kappa-product            chi^{|I|-1} k[e p_I] - prod k[e p_j]^{i_j}           (closed)
///   kappa-product-printed    chi^{|I|} k[e p_I] - prod k[e p_j]^{i_j}             (closed)
///   euler-class-power        c[e]^j, j = 1..3; refuted means e is not nilpotent   (pointed)
///   odd-euler-kappa-power    k[e^{2k+1}]^2, k = 1..3                              (closed)
/// Pontrjagin multi-indices have 1 <= |I| <= 4 and range over p1..pn at genus 0,
/// p1..p_{n-1} otherwise.
std::vector<AuditReport> builtin_relation_suite(int n, int g, int max_degree = 16);

}  // namespace taut
