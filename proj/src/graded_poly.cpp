#include "taut/graded_poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

#include "taut/errors.hpp"

namespace taut {

GeneratorTable::GeneratorTable(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.name.empty()) throw DomainError("generator name must be non-empty");
    if (!seen.insert(g.name).second) throw DomainError("duplicate generator name '" + g.name + "'");
    if (g.degree <= 0 || g.degree % 2 != 0)
      throw DomainError("generator '" + g.name + "' must have positive even degree, got " +
                        std::to_string(g.degree));
  }
}

std::optional<std::size_t> GeneratorTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

std::size_t GeneratorTable::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw DomainError("unknown generator '" + std::string(name) + "'");
}

TablePtr make_table(std::vector<Generator> gens) {
  return std::make_shared<const GeneratorTable>(std::move(gens));
}

int monomial_degree(const GeneratorTable& table, const Exponents& exps) {
  int d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) d += static_cast<int>(exps[i]) * table[i].degree;
  return d;
}

namespace {

bool same_table(const TablePtr& a, const TablePtr& b) { return a == b || *a == *b; }

void require_same(const GradedPoly& a, const GradedPoly& b) {
  if (!same_table(a.table(), b.table())) throw DomainError("generator table mismatch");
}

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

GradedPoly multiply_impl(const GradedPoly& a, const GradedPoly& b, int max_degree, bool throw_on_excess) {
  require_same(a, b);
  GradedPoly out(a.table());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int d = ma.degree + mb.degree;
      if (d > max_degree) {
        if (throw_on_excess)
          throw ResourceError("degree bound " + std::to_string(max_degree) + " exceeded (degree " +
                              std::to_string(d) + ")");
        continue;
      }
      out.add_term(add_exps(ma.exps, mb.exps), ca * cb);
    }
  }
  return out;
}

constexpr int kUnbounded = std::numeric_limits<int>::max();

}  // namespace

GradedPoly::GradedPoly(TablePtr table) : table_(std::move(table)) {
  if (!table_) throw DomainError("null generator table");
}

GradedPoly GradedPoly::constant(TablePtr table, const Rational& c) {
  GradedPoly p(std::move(table));
  p.add_term(Exponents(p.table_->size(), 0), c);
  return p;
}

GradedPoly GradedPoly::monomial(TablePtr table, Exponents exps, const Rational& c) {
  GradedPoly p(std::move(table));
  if (exps.size() != p.table_->size()) throw DomainError("exponent vector does not match table arity");
  p.add_term(exps, c);
  return p;
}

GradedPoly GradedPoly::generator(TablePtr table, std::string_view name, std::uint32_t power) {
  Exponents e(table->size(), 0);
  e[table->require(name)] = power;
  return monomial(std::move(table), std::move(e));
}

bool GradedPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree == 0);
}

bool GradedPoly::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree == terms_.rbegin()->first.degree;
}

std::optional<int> GradedPoly::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree;
}

Rational GradedPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(Monomial{monomial_degree(*table_, exps), exps});
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPoly::add_term_keyed(const Monomial& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GradedPoly::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != table_->size()) throw DomainError("exponent vector does not match table arity");
  add_term_keyed(Monomial{monomial_degree(*table_, exps), exps}, c);
}

GradedPoly GradedPoly::relabel(TablePtr table) const {
  if (table->size() != table_->size()) throw DomainError("relabel: arity mismatch");
  for (std::size_t i = 0; i < table->size(); ++i)
    if ((*table)[i].degree != (*table_)[i].degree) throw DomainError("relabel: degree mismatch");
  GradedPoly out(std::move(table));
  out.terms_ = terms_;
  return out;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& rhs) {
  require_same(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term_keyed(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& rhs) {
  require_same(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term_keyed(m, -c);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  return multiply_impl(a, b, kUnbounded, false);
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

bool GradedPoly::operator==(const GradedPoly& rhs) const {
  return same_table(table_, rhs.table_) && terms_ == rhs.terms_;
}

GradedPoly poly_arith(const GradedPoly& a, const GradedPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  throw DomainError("unknown arithmetic operation");
}

GradedPoly multiply_truncated(const GradedPoly& a, const GradedPoly& b, int max_degree) {
  return multiply_impl(a, b, max_degree, false);
}

GradedPoly multiply_bounded(const GradedPoly& a, const GradedPoly& b, int max_degree) {
  return multiply_impl(a, b, max_degree, true);
}

GradedPoly pow_bounded(const GradedPoly& x, unsigned k, int max_degree) {
  GradedPoly result = GradedPoly::constant(x.table(), 1);
  GradedPoly base = x;
  while (k != 0) {
    if (k & 1U) result = multiply_bounded(result, base, max_degree);
    k >>= 1;
    if (k != 0) base = multiply_bounded(base, base, max_degree);
  }
  return result;
}

GradedPoly pow(const GradedPoly& x, unsigned k) { return pow_bounded(x, k, kUnbounded); }

GradedPoly homogeneous_component(const GradedPoly& x, int degree) {
  GradedPoly out(x.table());
  for (const auto& [m, c] : x.terms())
    if (m.degree == degree) out.add_term(m.exps, c);
  return out;
}

ParitySplit parity_split(const GradedPoly& x, std::string_view gen) {
  const std::size_t idx = x.table()->require(gen);
  ParitySplit out{GradedPoly(x.table()), GradedPoly(x.table())};
  for (const auto& [m, c] : x.terms()) {
    if (m.exps[idx] % 2 == 0) {
      out.even_part.add_term(m.exps, c);
    } else {
      Exponents e = m.exps;
      e[idx] -= 1;
      out.odd_cofactor.add_term(e, c);
    }
  }
  return out;
}

RingMap::RingMap(TablePtr source, TablePtr target, std::vector<GradedPoly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->size()) throw DomainError("ring map: one image per source generator required");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto& img = images_[i];
    if (!same_table(img.table(), target_)) throw DomainError("ring map: image not over the target table");
    if (!img.is_homogeneous() || (!img.is_zero() && *img.max_degree() != (*source_)[i].degree))
      throw DomainError("ring map: image of '" + (*source_)[i].name + "' is not homogeneous of degree " +
                        std::to_string((*source_)[i].degree));
  }
}

RingMap RingMap::identity(const TablePtr& table) {
  std::vector<GradedPoly> images;
  for (const auto& g : table->generators()) images.push_back(GradedPoly::generator(table, g.name));
  return RingMap(table, table, std::move(images));
}

GradedPoly apply_map_bounded(const RingMap& f, const GradedPoly& x, int max_degree) {
  if (!same_table(x.table(), f.source())) throw DomainError("apply_map: polynomial is not over the map's source");
  const std::size_t n = f.source()->size();
  // powers[i][k] = image_i^k, filled on demand
  std::vector<std::vector<GradedPoly>> powers(n);
  auto power = [&](std::size_t i, std::uint32_t k) -> const GradedPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(GradedPoly::constant(f.target(), 1));
    while (cache.size() <= k) cache.push_back(multiply_bounded(cache.back(), f.image(i), max_degree));
    return cache[k];
  };
  GradedPoly out(f.target());
  for (const auto& [m, c] : x.terms()) {
    GradedPoly term = GradedPoly::constant(f.target(), c);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i)
      if (m.exps[i] != 0) term = multiply_bounded(term, power(i, m.exps[i]), max_degree);
    out += term;
  }
  return out;
}

GradedPoly apply_map(const RingMap& f, const GradedPoly& x) { return apply_map_bounded(f, x, kUnbounded); }

RingMap compose(const RingMap& outer, const RingMap& inner) {
  if (!same_table(inner.target(), outer.source())) throw DomainError("compose: tables do not chain");
  std::vector<GradedPoly> images;
  for (const auto& img : inner.images()) images.push_back(apply_map(outer, img));
  return RingMap(inner.source(), outer.target(), std::move(images));
}

std::string monomial_to_string(const GeneratorTable& table, const Exponents& exps) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += table[i].name;
    if (exps[i] > 1) out += '^' + std::to_string(exps[i]);
  }
  return out;
}

std::string to_string(const GradedPoly& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    const std::string mono = monomial_to_string(*x.table(), m.exps);
    if (mono.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + '*';
      out += mono;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const TablePtr& table) : text_(text), table_(table) {
    // longest names first so "p1" never shadows "p12" or "p1'"
    for (std::size_t i = 0; i < table->size(); ++i) by_length_.push_back(i);
    std::stable_sort(by_length_.begin(), by_length_.end(), [&](std::size_t a, std::size_t b) {
      return (*table)[a].name.size() > (*table)[b].name.size();
    });
  }

  GradedPoly parse() {
    GradedPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  unsigned long nat() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", pos_);
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  GradedPoly expr() {
    GradedPoly acc(table_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    GradedPoly t = term();
    acc += negate ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }
  GradedPoly term() {
    GradedPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }
  GradedPoly factor() {
    GradedPoly base = atom();
    while (accept('^')) base = pow(base, static_cast<unsigned>(nat()));
    return base;
  }
  GradedPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (accept('(')) {
      GradedPoly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Rational q(Integer(std::to_string(nat())));
      if (accept('/')) {
        const auto den = nat();
        if (den == 0) throw ParseError("zero denominator", pos_);
        q /= Rational(Integer(std::to_string(den)));
      }
      return GradedPoly::constant(table_, q);
    }
    for (std::size_t i : by_length_) {
      const auto& name = (*table_)[i].name;
      if (text_.substr(pos_, name.size()) == name) {
        pos_ += name.size();
        return GradedPoly::generator(table_, name);
      }
    }
    throw ParseError("unknown symbol", pos_);
  }

  std::string_view text_;
  TablePtr table_;
  std::vector<std::size_t> by_length_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedPoly parse_poly(std::string_view text, const TablePtr& table) { return PolyParser(text, table).parse(); }

}  // namespace taut
