#include "taut/independence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "taut/errors.hpp"
#include "taut/simd/modp.hpp"

namespace taut {

bool TruncatedKernelResult::injective() const { return first_kernel_degree() < 0; }

int TruncatedKernelResult::first_kernel_degree() const {
  for (const auto& d : degrees)
    if (!d.basis.empty()) return d.degree;
  return -1;
}

std::vector<Exponents> monomials_of_degree(const GeneratorTable& table, int degree, std::size_t cap) {
  std::vector<Exponents> out;
  Exponents cur(table.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == table.size()) {
      if (left == 0) {
        if (out.size() >= cap)
          throw ResourceError("more than " + std::to_string(cap) + " source monomials in degree " +
                              std::to_string(degree));
        out.push_back(cur);
      }
      return;
    }
    const int d = table[i].degree;
    for (int k = left / d; k >= 0; --k) {
      cur[i] = static_cast<std::uint32_t>(k);
      rec(i + 1, left - k * d);
    }
    cur[i] = 0;
  };
  if (degree >= 0) rec(0, degree);
  return out;
}

namespace {

// Sparse integer row, entries sorted by column, no explicit zeros.
using Row = std::vector<std::pair<std::size_t, Integer>>;

struct Echelon {
  std::vector<Row> rows;            // leading column strictly increasing
  std::vector<std::size_t> pivots;  // leading column of each row
};

// (a/g) * x - (b/g) * y with g = gcd(a, b), divided by its content.
Row combine_rows(const Row& x, const Integer& a, const Row& y, const Integer& b) {
  Integer g, ca, cb;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_divexact(ca.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(cb.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
  Row out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  Integer v;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, ca * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -cb * y[j].second);
      ++j;
    } else {
      mpz_mul(v.get_mpz_t(), ca.get_mpz_t(), x[i].second.get_mpz_t());
      mpz_submul(v.get_mpz_t(), cb.get_mpz_t(), y[j].second.get_mpz_t());
      if (v != 0) out.emplace_back(x[i].first, v);
      ++i;
      ++j;
    }
  }
  Integer content = 0;
  for (const auto& [c, e] : out) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.get_mpz_t());
  if (content > 1)
    for (auto& [c, e] : out) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), content.get_mpz_t());
  return out;
}

// Fraction-free elimination over Z on sparse rows. Rows are bucketed by leading
// column; in each column the shortest candidate becomes the pivot.
Echelon eliminate(std::vector<Row> rows, std::size_t cols) {
  std::vector<std::vector<std::size_t>> bucket(cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].empty()) bucket[rows[i].front().first].push_back(i);
  Echelon out;
  for (std::size_t col = 0; col < cols; ++col) {
    auto& cand = bucket[col];
    if (cand.empty()) continue;
    const auto best = std::min_element(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
      return rows[a].size() != rows[b].size() ? rows[a].size() < rows[b].size() : a < b;
    });
    const std::size_t piv = *best;
    for (std::size_t i : cand) {
      if (i == piv) continue;
      Row next = combine_rows(rows[i], rows[piv].front().second, rows[piv], rows[i].front().second);
      if (!next.empty()) bucket[next.front().first].push_back(i);
      rows[i] = std::move(next);
    }
    out.pivots.push_back(col);
    out.rows.push_back(std::move(rows[piv]));
    cand.clear();
  }
  return out;
}

std::vector<std::vector<Integer>> null_space(const Echelon& ech, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::vector<Integer>> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols, 0);
    x[free] = 1;
    for (std::size_t r = ech.rows.size(); r-- > 0;) {
      const auto& row = ech.rows[r];
      Rational s = 0;
      for (std::size_t k = 1; k < row.size(); ++k)
        if (x[row[k].first] != 0) s += Rational(row[k].second) * x[row[k].first];
      x[row.front().first] = -s / Rational(row.front().second);
    }
    // clear denominators and content
    Integer l = 1, g = 0;
    for (const auto& q : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> v(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      Rational t = x[j] * l;
      v[j] = t.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
    }
    for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::size_t> modular_ranks(const std::vector<Row>& m, std::size_t cols) {
  std::vector<std::size_t> out;
  const auto isa = simd::active_isa();
  for (auto p : simd::prepass_primes()) {
    std::vector<std::vector<double>> rows(m.size(), std::vector<double>(cols, 0.0));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (const auto& [j, e] : m[i]) rows[i][j] = static_cast<double>(mpz_fdiv_ui(e.get_mpz_t(), p));
    out.push_back(simd::rank_mod_p(std::move(rows), p, isa));
  }
  return out;
}

DegreeKernel kernel_in_degree(const RingMap& f, int degree, const KernelOptions& opts) {
  DegreeKernel out;
  out.degree = degree;
  const auto sources = monomials_of_degree(*f.source(), degree, opts.size_cap);
  out.source_dim = sources.size();
  if (sources.empty()) return out;

  std::vector<GradedPoly> images;
  std::map<Exponents, std::size_t> row_of;
  for (const auto& s : sources) {
    images.push_back(apply_map(f, GradedPoly::monomial(f.source(), s)));
    for (const auto& [mono, c] : images.back().terms()) row_of.emplace(mono.exps, 0);
  }
  std::size_t idx = 0;
  for (auto& [mono, row] : row_of) row = idx++;

  // integer columns: image of source j scaled by the lcm of its denominators
  const std::size_t cols = sources.size();
  // column j is image j times scale[j], a primitive integer vector
  std::vector<Row> m(row_of.size());
  std::vector<Rational> scale(cols, 1);
  for (std::size_t j = 0; j < cols; ++j) {
    Integer den = 1, content = 0;
    for (const auto& [mono, c] : images[j].terms()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num_mpz_t());
    }
    if (content != 0) scale[j] = Rational(den) / Rational(content);
    for (const auto& [mono, c] : images[j].terms()) {
      Rational t = c * scale[j];
      m[row_of.at(mono.exps)].emplace_back(j, t.get_num());  // j ascending, so rows stay sorted
    }
  }

  if (opts.modular_prepass) out.modular_ranks = modular_ranks(m, cols);

  Echelon ech = eliminate(m, cols);
  out.rank = ech.pivots.size();
  std::vector<Row> reversed(m.rbegin(), m.rend());
  if (eliminate(std::move(reversed), cols).pivots.size() != out.rank)
    throw std::logic_error("kernel: rank differs under row permutation in degree " + std::to_string(degree));
  for (auto r : out.modular_ranks)
    if (r > out.rank) throw std::logic_error("kernel: modular rank exceeds exact rank");

  for (const auto& v : null_space(ech, cols)) {
    GradedPoly k(f.source());
    for (std::size_t j = 0; j < cols; ++j)
      if (v[j] != 0) k.add_term(sources[j], Rational(v[j]) * scale[j]);
    // make the leading (last in canonical order) coefficient positive
    if (!k.is_zero() && k.terms().rbegin()->second < 0) k = -k;
    if (!apply_map(f, k).is_zero())
      throw std::logic_error("kernel: element does not map to zero in degree " + std::to_string(degree));
    out.basis.push_back(std::move(k));
  }
  if (out.basis.size() + out.rank != out.source_dim) throw std::logic_error("kernel: rank-nullity mismatch");
  return out;
}

}  // namespace

TruncatedKernelResult kernel_up_to_degree(const RingMap& f, int max_degree, const KernelOptions& opts) {
  if (max_degree < 0 || max_degree % 2 != 0) throw DomainError("kernel: max_degree must be even and >= 0");
  TruncatedKernelResult out{f, max_degree, {}};
  for (int d = 0; d <= max_degree; d += 2) out.degrees.push_back(kernel_in_degree(f, d, opts));
  return out;
}

PresentationGenerator kappa_ep_generator(int n, int j) {
  if (j < 1 || j > n) throw DomainError("k[e*p_j] needs 1 <= j <= n");
  std::vector<unsigned> exps(static_cast<std::size_t>(n), 0);
  exps[static_cast<std::size_t>(j - 1)] = 1;
  return {LeafKind::kappa, pontrjagin_monomial(n, exps).times_euler(), "K[e*p" + std::to_string(j) + "]", 4 * j};
}

TruncatedKernelResult check_generator_independence(const std::vector<PresentationGenerator>& gens,
                                                   const BundleModel& model, int max_degree,
                                                   const KernelOptions& opts) {
  if (gens.empty()) throw DomainError("independence: no generators to check");
  std::vector<Generator> table;
  std::vector<GradedPoly> images;
  for (const auto& g : gens) {
    table.push_back({g.name, g.degree});
    images.push_back(g.kind == LeafKind::kappa ? model.kappa(g.mono) : model.cls(g.mono));
  }
  RingMap f(make_table(std::move(table)), model.target(), std::move(images));
  return kernel_up_to_degree(f, max_degree, opts);
}

TruncatedKernelResult check_presentation_independence(int n, int g, Flavor flavor, int max_degree,
                                                      const KernelOptions& opts) {
  if (n < 1) throw DomainError("independence: n must be >= 1");
  if (g < 0) throw DomainError("independence: genus must be >= 0");
  if (max_degree < 0) max_degree = 8 * n;
  if (flavor == Flavor::disc) throw DomainError("independence: the disc presentation has no generators");
  if (g == 1 && flavor == Flavor::closed)
    throw DomainError("independence: at genus 1 the closed presentation has no generators");
  if (g == 0 && flavor == Flavor::pointed)
    throw UnsupportedCase("independence: the pointed presentation is not defined at genus 0");

  std::vector<PresentationGenerator> gens;
  if (g == 0) {
    for (int j = 1; j <= n; ++j) gens.push_back(kappa_ep_generator(n, j));
    return check_generator_independence(gens, BundleModel::sphere(n), max_degree, opts);
  }
  if (n < 2) throw DomainError("independence: the Lie-group model needs n >= 2");
  if (g == 1) {
    TautPresentation pres(n, g, flavor);
    return check_generator_independence(pres.generators(), BundleModel::pointed_liegroup(n, g), max_degree, opts);
  }
  const int eps = n % 2;
  for (int j = 1; j <= n - eps; ++j) gens.push_back(kappa_ep_generator(n, j));
  return check_generator_independence(gens, BundleModel::liegroup(n, g), max_degree, opts);
}

}  // namespace taut
