#include "taut/kappa_expr.hpp"

#include <cctype>

#include "taut/errors.hpp"

namespace taut {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::closed: return "closed";
    case Flavor::pointed: return "pointed";
    case Flavor::disc: return "disc";
  }
  return "?";
}

Flavor parse_flavor(const std::string& name) {
  for (auto f : {Flavor::closed, Flavor::pointed, Flavor::disc})
    if (to_string(f) == name) return f;
  throw DomainError("unknown flavor '" + name + "'");
}

namespace {

NodePtr make(auto&& alt) { return std::make_shared<const KappaNode>(KappaNode{std::forward<decltype(alt)>(alt)}); }

void check_same_n(const KappaExpr& a, const KappaExpr& b) {
  if (a.n() != b.n()) throw DomainError("expressions for different n combined");
}

}  // namespace

KappaExpr KappaExpr::constant(int n, const Rational& q) { return KappaExpr(n, make(node::Constant{q}), false); }

KappaExpr KappaExpr::kappa(const BasisMonomial& c) {
  return KappaExpr(c.n, make(node::Leaf{LeafKind::kappa, c}), false);
}

KappaExpr KappaExpr::cls(const BasisMonomial& c) { return KappaExpr(c.n, make(node::Leaf{LeafKind::cls, c}), true); }

namespace {

// Flattens a + b and a - b; a nested sum on the right is only spliced when added.
NodePtr sum_of(const NodePtr& a, const NodePtr& b, bool negate_b) {
  node::Sum out;
  if (const auto* s = std::get_if<node::Sum>(&a->v))
    out.terms = s->terms;
  else
    out.terms.emplace_back(false, a);
  const auto* sb = std::get_if<node::Sum>(&b->v);
  if (sb != nullptr && !negate_b)
    out.terms.insert(out.terms.end(), sb->terms.begin(), sb->terms.end());
  else
    out.terms.emplace_back(negate_b, b);
  return make(std::move(out));
}

NodePtr product_of(const NodePtr& a, const NodePtr& b) {
  node::Product out;
  for (const auto* x : {&a, &b}) {
    if (const auto* p = std::get_if<node::Product>(&(*x)->v))
      out.factors.insert(out.factors.end(), p->factors.begin(), p->factors.end());
    else
      out.factors.push_back(*x);
  }
  return make(std::move(out));
}

}  // namespace

KappaExpr operator+(const KappaExpr& a, const KappaExpr& b) {
  check_same_n(a, b);
  return KappaExpr(a.n_, sum_of(a.root_, b.root_, false), a.has_cls_ || b.has_cls_);
}

KappaExpr operator-(const KappaExpr& a, const KappaExpr& b) {
  check_same_n(a, b);
  return KappaExpr(a.n_, sum_of(a.root_, b.root_, true), a.has_cls_ || b.has_cls_);
}

KappaExpr operator*(const KappaExpr& a, const KappaExpr& b) {
  check_same_n(a, b);
  return KappaExpr(a.n_, product_of(a.root_, b.root_), a.has_cls_ || b.has_cls_);
}

KappaExpr KappaExpr::operator-() const {
  if (const auto* c = std::get_if<node::Constant>(&root_->v)) return constant(n_, -c->value);
  return KappaExpr(n_, make(node::Sum{{{true, root_}}}), has_cls_);
}

KappaExpr KappaExpr::pow(unsigned k) const {
  if (k == 1) return *this;
  return KappaExpr(n_, make(node::Power{root_, k}), has_cls_);
}

namespace {

// precedence: 0 sum, 1 product, 2 power/atom
int precedence(const KappaNode& x) {
  if (std::holds_alternative<node::Sum>(x.v)) return 0;
  if (std::holds_alternative<node::Product>(x.v)) return 1;
  if (const auto* c = std::get_if<node::Constant>(&x.v)) {
    if (c->value < 0) return 0;
    if (c->value.get_den() != 1) return 1;
  }
  return 2;
}

std::string render(const KappaNode& x);

std::string render_at(const KappaNode& x, int min_prec) {
  std::string s = render(x);
  return precedence(x) < min_prec ? "(" + s + ")" : s;
}

std::string render(const KappaNode& x) {
  return std::visit(
      [](const auto& alt) -> std::string {
        using T = std::decay_t<decltype(alt)>;
        if constexpr (std::is_same_v<T, node::Constant>) {
          return to_string(alt.value);
        } else if constexpr (std::is_same_v<T, node::Leaf>) {
          return std::string(alt.kind == LeafKind::kappa ? "k[" : "c[") + alt.mono.to_string() + "]";
        } else if constexpr (std::is_same_v<T, node::Sum>) {
          std::string out;
          for (std::size_t i = 0; i < alt.terms.size(); ++i) {
            const auto& [neg, t] = alt.terms[i];
            if (i == 0) {
              out += neg ? "-" + render_at(*t, 1) : render_at(*t, 0);
            } else {
              out += (neg ? " - " : " + ") + render_at(*t, 1);
            }
          }
          return out;
        } else if constexpr (std::is_same_v<T, node::Product>) {
          std::string out;
          for (std::size_t i = 0; i < alt.factors.size(); ++i) {
            if (i) out += '*';
            out += render_at(*alt.factors[i], 2);
          }
          return out;
        } else {
          return render_at(*alt.base, 2) + "^" + std::to_string(alt.exponent);
        }
      },
      x.v);
}

void visit_leaves(const KappaNode& x, const std::function<void(const node::Leaf&)>& fn) {
  std::visit(
      [&](const auto& alt) {
        using T = std::decay_t<decltype(alt)>;
        if constexpr (std::is_same_v<T, node::Leaf>) {
          fn(alt);
        } else if constexpr (std::is_same_v<T, node::Sum>) {
          for (const auto& [neg, t] : alt.terms) visit_leaves(*t, fn);
        } else if constexpr (std::is_same_v<T, node::Product>) {
          for (const auto& f : alt.factors) visit_leaves(*f, fn);
        } else if constexpr (std::is_same_v<T, node::Power>) {
          visit_leaves(*alt.base, fn);
        }
      },
      x.v);
}

}  // namespace

std::string KappaExpr::to_string() const { return render(*root_); }

void KappaExpr::for_each_leaf(const std::function<void(const node::Leaf&)>& fn) const { visit_leaves(*root_, fn); }

namespace {

class Parser {
 public:
  Parser(std::string_view src, int n, Flavor flavor) : src_(src), n_(n), flavor_(flavor) {
    if (n < 1) throw DomainError("parse: n must be >= 1");
  }

  KappaExpr run() {
    KappaExpr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  Integer digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(src_.substr(start, pos_ - start)));
  }
  unsigned small_nat() {
    const std::size_t at = pos_;
    Integer v = digits();
    if (v > 1000000) {
      pos_ = at;
      fail("number too large");
    }
    return static_cast<unsigned>(v.get_ui());
  }

  KappaExpr expr() {
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    KappaExpr acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }
  KappaExpr term() {
    KappaExpr acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }
  KappaExpr factor() {
    KappaExpr base = primary();
    while (accept('^')) base = base.pow(small_nat());
    return base;
  }
  KappaExpr primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      KappaExpr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q(digits());
      if (accept('/')) {
        const std::size_t at = pos_;
        Integer den = digits();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        q /= Rational(den);
      }
      return KappaExpr::constant(n_, q);
    }
    if (c == 'k' || c == 'K' || c == 'c') {
      const std::size_t at = pos_;
      ++pos_;
      if (pos_ >= src_.size() || src_[pos_] != '[') fail("expected '[' after '" + std::string(1, c) + "'");
      ++pos_;
      BasisMonomial m = mono();
      expect(']');
      if (c == 'c') {
        if (flavor_ != Flavor::pointed) {
          pos_ = at;
          fail("class leaf c[...] only allowed in the pointed flavor");
        }
        return KappaExpr::cls(m);
      }
      return KappaExpr::kappa(m);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }
  BasisMonomial mono() {
    unsigned a = 0;
    std::vector<unsigned> b(static_cast<std::size_t>(n_ - 1), 0);
    if (peek() == '1') {
      ++pos_;
      return BasisMonomial(n_, 0, b);
    }
    do {
      const char c = peek();
      if (c == 'e') {
        ++pos_;
        a += accept('^') ? small_nat() : 1U;
      } else if (c == 'p') {
        ++pos_;
        const std::size_t at = pos_;
        const unsigned idx = small_nat();
        if (idx < 1 || static_cast<int>(idx) > n_) {
          pos_ = at;
          fail("Pontrjagin index p" + std::to_string(idx) + " out of range 1.." + std::to_string(n_));
        }
        const unsigned k = accept('^') ? small_nat() : 1U;
        if (static_cast<int>(idx) == n_) a += 2 * k;  // p_n = e^2
        else b[idx - 1] += k;
      } else {
        fail("expected 'e', 'p<i>' or '1' in monomial");
      }
    } while (accept('*'));
    return BasisMonomial(n_, a, b);
  }

  std::string_view src_;
  int n_;
  Flavor flavor_;
  std::size_t pos_ = 0;
};

}  // namespace

KappaExpr parse(std::string_view src, int n, Flavor flavor) { return Parser(src, n, flavor).run(); }

namespace {

GradedPoly eval_node(const KappaNode& x, const TablePtr& target, const LeafEvaluator& leaf_value, int max_degree) {
  return std::visit(
      [&](const auto& alt) -> GradedPoly {
        using T = std::decay_t<decltype(alt)>;
        if constexpr (std::is_same_v<T, node::Constant>) {
          return GradedPoly::constant(target, alt.value);
        } else if constexpr (std::is_same_v<T, node::Leaf>) {
          return leaf_value(alt);
        } else if constexpr (std::is_same_v<T, node::Sum>) {
          GradedPoly acc(target);
          for (const auto& [neg, t] : alt.terms) {
            GradedPoly v = eval_node(*t, target, leaf_value, max_degree);
            if (neg) acc -= v;
            else acc += v;
          }
          return acc;
        } else if constexpr (std::is_same_v<T, node::Product>) {
          GradedPoly acc = GradedPoly::constant(target, 1);
          for (const auto& f : alt.factors) {
            acc = multiply_bounded(acc, eval_node(*f, target, leaf_value, max_degree), max_degree);
            if (acc.is_zero()) break;
          }
          return acc;
        } else {
          return pow_bounded(eval_node(*alt.base, target, leaf_value, max_degree), alt.exponent, max_degree);
        }
      },
      x.v);
}

}  // namespace

GradedPoly evaluate(const KappaExpr& x, const TablePtr& target, const LeafEvaluator& leaf_value, int max_degree) {
  return eval_node(*x.root(), target, leaf_value, max_degree);
}

}  // namespace taut
