#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "taut/char_class.hpp"

namespace taut {

enum class Flavor { closed, pointed, disc };

std::string to_string(Flavor f);
Flavor parse_flavor(const std::string& name);

enum class LeafKind { kappa, cls };

struct KappaNode;
using NodePtr = std::shared_ptr<const KappaNode>;

namespace node {
struct Constant {
  Rational value;
};
struct Leaf {
  LeafKind kind;
  BasisMonomial mono;
};
struct Sum {
  std::vector<std::pair<bool, NodePtr>> terms;  // (negated, term)
};
struct Product {
  std::vector<NodePtr> factors;
};
struct Power {
  NodePtr base;
  unsigned exponent;
};
}  // namespace node

struct KappaNode {
  std::variant<node::Constant, node::Leaf, node::Sum, node::Product, node::Power> v;
};

/// Immutable polynomial expression in the symbols kappa_c (and c, pointed flavor).
class KappaExpr {
 public:
  static KappaExpr constant(int n, const Rational& q);
  static KappaExpr kappa(const BasisMonomial& c);
  static KappaExpr cls(const BasisMonomial& c);

  int n() const noexcept { return n_; }
  const NodePtr& root() const noexcept { return root_; }
  bool has_class_leaves() const noexcept { return has_cls_; }

  friend KappaExpr operator+(const KappaExpr& a, const KappaExpr& b);
  friend KappaExpr operator-(const KappaExpr& a, const KappaExpr& b);
  friend KappaExpr operator*(const KappaExpr& a, const KappaExpr& b);
  KappaExpr operator-() const;
  KappaExpr pow(unsigned k) const;

  /// Re-parseable text, e.g. "2*k[e*p1*p2] - k[e*p1]*k[e*p2]".
  std::string to_string() const;

  /// Every leaf, depth first.
  void for_each_leaf(const std::function<void(const node::Leaf&)>& fn) const;

 private:
  KappaExpr(int n, NodePtr root, bool has_cls) : n_(n), root_(std::move(root)), has_cls_(has_cls) {}

  int n_;
  NodePtr root_;
  bool has_cls_;
};

/// Grammar (whitespace-insensitive):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := primary ('^' nat)*
///   primary:= rational | 'k[' mono ']' | 'c[' mono ']' | '(' expr ')'
///   mono   := '1' | atom ('*' atom)*
///   atom   := 'e' ('^' nat)? | 'p' nat ('^' nat)?
/// 'K[' is accepted as a synonym of 'k[' so rendered normal forms read back.
/// p_n is folded to e^2. Throws ParseError (with position) on syntax errors,
/// class leaves outside the pointed flavor, and Pontrjagin indices outside 1..n.
KappaExpr parse(std::string_view src, int n, Flavor flavor);

using LeafEvaluator = std::function<GradedPoly(const node::Leaf&)>;

/// Evaluates the expression as a polynomial over `target`, substituting each leaf
/// through `leaf_value`. Intermediate products above `max_degree` raise ResourceError.
GradedPoly evaluate(const KappaExpr& x, const TablePtr& target, const LeafEvaluator& leaf_value, int max_degree);

}  // namespace taut
