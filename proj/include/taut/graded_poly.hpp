#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taut/exact_arith.hpp"

namespace taut {

struct Generator {
  std::string name;
  int degree = 0;

  bool operator==(const Generator&) const = default;
};

/// Ordered list of named generators with positive even degrees.
class GeneratorTable {
 public:
  /// Throws DomainError on duplicate names or non-positive/odd degrees.
  explicit GeneratorTable(std::vector<Generator> gens);

  std::size_t size() const noexcept { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_.at(i); }
  const std::vector<Generator>& generators() const noexcept { return gens_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of, but throws DomainError for unknown names.
  std::size_t require(std::string_view name) const;

  bool operator==(const GeneratorTable&) const = default;

 private:
  std::vector<Generator> gens_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

TablePtr make_table(std::vector<Generator> gens);

using Exponents = std::vector<std::uint32_t>;

/// Term key. Ordering is graded-lexicographic: total degree first, then the
/// exponent vector lexicographically. Both ascend.
struct Monomial {
  int degree = 0;
  Exponents exps;

  auto operator<=>(const Monomial&) const = default;
};

int monomial_degree(const GeneratorTable& table, const Exponents& exps);

class GradedPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit GradedPoly(TablePtr table);

  static GradedPoly constant(TablePtr table, const Rational& c);
  static GradedPoly monomial(TablePtr table, Exponents exps, const Rational& c = 1);
  static GradedPoly generator(TablePtr table, std::string_view name, std::uint32_t power = 1);

  const TablePtr& table() const noexcept { return table_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_homogeneous() const;
  /// Largest total degree of a term; nullopt for zero.
  std::optional<int> max_degree() const;
  Rational coefficient(const Exponents& exps) const;

  /// Adds c * x^exps, pruning a resulting zero coefficient.
  void add_term(const Exponents& exps, const Rational& c);

  /// Same polynomial over another table of identical arity and degrees (renaming).
  GradedPoly relabel(TablePtr table) const;

  GradedPoly& operator+=(const GradedPoly& rhs);
  GradedPoly& operator-=(const GradedPoly& rhs);
  GradedPoly& operator*=(const Rational& c);

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
  friend GradedPoly operator*(const Rational& c, GradedPoly a) { return a *= c; }
  GradedPoly operator-() const;

  /// Equal tables (by content) and equal terms.
  bool operator==(const GradedPoly& rhs) const;

 private:
  void add_term_keyed(const Monomial& key, const Rational& c);

  TablePtr table_;
  TermMap terms_;
};

enum class ArithOp { add, sub, mul };

/// Throws DomainError when the generator tables differ.
GradedPoly poly_arith(const GradedPoly& a, const GradedPoly& b, ArithOp op);

/// Product keeping only terms of total degree <= max_degree.
GradedPoly multiply_truncated(const GradedPoly& a, const GradedPoly& b, int max_degree);

/// Product that throws ResourceError if any term exceeds max_degree.
GradedPoly multiply_bounded(const GradedPoly& a, const GradedPoly& b, int max_degree);

GradedPoly pow(const GradedPoly& x, unsigned k);
GradedPoly pow_bounded(const GradedPoly& x, unsigned k, int max_degree);

GradedPoly homogeneous_component(const GradedPoly& x, int degree);

struct ParitySplit {
  GradedPoly even_part;
  GradedPoly odd_cofactor;
};

/// x = even_part + g * odd_cofactor with both parts even in g.
ParitySplit parity_split(const GradedPoly& x, std::string_view gen);

/// Graded ring homomorphism given by the image of each source generator.
class RingMap {
 public:
  /// Images must live over `target` and be homogeneous of the generator's
  /// degree (zero is allowed). Throws DomainError otherwise.
  RingMap(TablePtr source, TablePtr target, std::vector<GradedPoly> images);

  static RingMap identity(const TablePtr& table);

  const TablePtr& source() const noexcept { return source_; }
  const TablePtr& target() const noexcept { return target_; }
  const std::vector<GradedPoly>& images() const noexcept { return images_; }
  const GradedPoly& image(std::size_t i) const { return images_.at(i); }

 private:
  TablePtr source_;
  TablePtr target_;
  std::vector<GradedPoly> images_;
};

GradedPoly apply_map(const RingMap& f, const GradedPoly& x);
/// apply_map with a ResourceError guard on intermediate degrees.
GradedPoly apply_map_bounded(const RingMap& f, const GradedPoly& x, int max_degree);

RingMap compose(const RingMap& outer, const RingMap& inner);

/// Canonical text: terms in canonical order, e.g. "7/180*p2 - 1/180*p1^2".
std::string to_string(const GradedPoly& x);
std::string monomial_to_string(const GeneratorTable& table, const Exponents& exps);

/// Parses canonical text (and any +,-,*,^,() combination of table generators and
/// rationals) back into a polynomial. Throws ParseError.
GradedPoly parse_poly(std::string_view text, const TablePtr& table);

}  // namespace taut
