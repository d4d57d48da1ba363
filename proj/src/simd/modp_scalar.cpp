#include <cstdlib>
#include <cstring>
#include <utility>

#include "taut/simd/modp.hpp"

namespace taut::simd {

std::string to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() {
  if (const char* env = std::getenv("TAUT_SIMD"); env != nullptr && std::strcmp(env, "scalar") == 0)
    return Isa::scalar;
  return avx2_supported() ? Isa::avx2 : Isa::scalar;
}

void axpy_mod_scalar(double* y, const double* x, double f, std::size_t len, double p) {
  const auto pp = static_cast<std::uint64_t>(p);
  const auto ff = static_cast<std::uint64_t>(f);
  for (std::size_t i = 0; i < len; ++i) {
    const auto prod = (ff * static_cast<std::uint64_t>(x[i])) % pp;
    y[i] = static_cast<double>((static_cast<std::uint64_t>(y[i]) + pp - prod) % pp);
  }
}

void axpy_mod(Isa isa, double* y, const double* x, double f, std::size_t len, double p) {
  if (isa == Isa::avx2)
    axpy_mod_avx2(y, x, f, len, p);
  else
    axpy_mod_scalar(y, x, f, len, p);
}

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

std::size_t rank_mod_p(std::vector<std::vector<double>> rows, std::uint32_t p, Isa isa) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  const double pd = p;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0.0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    // normalise the pivot row to a leading 1
    const auto inv = inverse_mod(static_cast<std::uint64_t>(rows[rank][col]), p);
    for (std::size_t j = col; j < cols; ++j)
      rows[rank][j] = static_cast<double>(static_cast<std::uint64_t>(rows[rank][j]) * inv % p);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const double f = rows[i][col];
      if (f != 0.0) axpy_mod(isa, rows[i].data() + col, rows[rank].data() + col, f, cols - col, pd);
    }
    ++rank;
  }
  return rank;
}

const std::vector<std::uint32_t>& prepass_primes() {
  static const std::vector<std::uint32_t> primes{67108859u, 67108837u, 67108819u, 67108777u};
  return primes;
}

}  // namespace taut::simd
