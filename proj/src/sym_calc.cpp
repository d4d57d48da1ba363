#include "taut/sym_calc.hpp"

#include <map>

#include "taut/errors.hpp"

namespace taut {

TablePtr variable_table(int n_vars) {
  if (n_vars < 1) throw DomainError("number of variables must be positive");
  std::vector<Generator> gens;
  for (int i = 1; i <= n_vars; ++i) gens.push_back({"x" + std::to_string(i), 2});
  return make_table(std::move(gens));
}

TablePtr weighted_table(const std::string& prefix, int n) {
  std::vector<Generator> gens;
  for (int i = 1; i <= n; ++i) gens.push_back({prefix + std::to_string(i), 4 * i});
  return make_table(std::move(gens));
}

GradedPoly product_expand(const EvenPowerSeries& f, int n_vars, int max_weight) {
  if (max_weight < 0 || max_weight % 2 != 0) throw DomainError("max_weight must be even and non-negative");
  // x^{2k} has degree 4k
  if (2 * f.order() < max_weight)
    throw DomainError("series truncated at x^" + std::to_string(f.order()) + ", below requested weight " +
                      std::to_string(max_weight));
  const TablePtr table = variable_table(n_vars);
  GradedPoly acc = GradedPoly::constant(table, 1);
  for (int v = 0; v < n_vars; ++v) {
    GradedPoly factor(table);
    for (std::size_t k = 0; 4 * static_cast<int>(k) <= max_weight && k < f.size(); ++k) {
      Exponents e(static_cast<std::size_t>(n_vars), 0);
      e[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(2 * k);
      factor.add_term(e, f[k]);
    }
    acc = multiply_truncated(acc, factor, max_weight);
  }
  return acc;
}

namespace {

// Elementary symmetric polynomial e_k in y_1..y_n (as a polynomial over `ytable`).
GradedPoly elementary(const TablePtr& ytable, int n, int k) {
  GradedPoly out(ytable);
  // iterate over k-subsets via bitmask-free combination stepping
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    Exponents e(static_cast<std::size_t>(n), 0);
    for (int i : idx) e[static_cast<std::size_t>(i)] = 1;
    out.add_term(e, 1);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::string transposition(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + " " + std::to_string(j + 1) + ")";
}

}  // namespace

RingMap elementary_substitution(int n_vars) {
  const TablePtr xt = variable_table(n_vars);
  std::vector<GradedPoly> images;
  for (int k = 1; k <= n_vars; ++k) {
    GradedPoly ek(xt);
    const GradedPoly plain = elementary(xt, n_vars, k);
    for (const auto& [m, c] : plain.terms()) {
      Exponents sq = m.exps;
      for (auto& v : sq) v *= 2;
      ek.add_term(sq, c);
    }
    images.push_back(std::move(ek));
  }
  return RingMap(weighted_table("s", n_vars), xt, std::move(images));
}

GradedPoly to_elementary(const GradedPoly& s) {
  const std::size_t n = s.table()->size();
  for (std::size_t i = 0; i < n; ++i)
    if ((*s.table())[i].degree != 2) throw DomainError("to_elementary: expects variables of degree 2");

  // Work in y_i = x_i^2, stored as a lex-descending map so the leading term is first.
  using LexMap = std::map<Exponents, Rational, std::greater<>>;
  LexMap work;
  for (const auto& [m, c] : s.terms()) {
    Exponents y(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (m.exps[i] % 2 != 0) throw DomainError("to_elementary: odd exponent of x" + std::to_string(i + 1));
      y[i] = m.exps[i] / 2;
    }
    work.emplace(std::move(y), c);
  }
  // Adjacent transpositions generate the symmetric group.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (const auto& [e, c] : work) {
      Exponents t = e;
      std::swap(t[i], t[i + 1]);
      auto it = work.find(t);
      if (it == work.end() || it->second != c)
        throw DomainError("to_elementary: input not symmetric; witness permutation " + transposition(i, i + 1));
    }
  }

  const int nv = static_cast<int>(n);
  const TablePtr ytable = make_table([&] {
    std::vector<Generator> g;
    for (int i = 1; i <= nv; ++i) g.push_back({"y" + std::to_string(i), 4});
    return g;
  }());
  std::vector<std::vector<GradedPoly>> epow(n);  // epow[k][j] = e_{k+1}^j
  auto e_power = [&](std::size_t k, std::uint32_t j) -> const GradedPoly& {
    auto& cache = epow[k];
    if (cache.empty()) cache.push_back(GradedPoly::constant(ytable, 1));
    while (cache.size() <= j) cache.push_back(cache.back() * elementary(ytable, nv, static_cast<int>(k) + 1));
    return cache[j];
  };

  const TablePtr stable = weighted_table("s", nv);
  GradedPoly result(stable);
  while (!work.empty()) {
    const Exponents lead = work.begin()->first;
    const Rational c = work.begin()->second;
    // lead is a partition: lead[0] >= lead[1] >= ... (guaranteed by symmetry)
    Exponents sig(n);
    GradedPoly prod = GradedPoly::constant(ytable, c);
    for (std::size_t k = 0; k < n; ++k) {
      sig[k] = lead[k] - (k + 1 < n ? lead[k + 1] : 0U);
      if (sig[k] != 0) prod = prod * e_power(k, sig[k]);
    }
    result.add_term(sig, c);
    for (const auto& [m, v] : prod.terms()) {
      auto [it, inserted] = work.try_emplace(m.exps, -v);
      if (!inserted) {
        it->second -= v;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return result;
}

}  // namespace taut
