#include <doctest.h>

#include <random>

#include "taut/simd/modp.hpp"

using namespace taut::simd;

TEST_SUITE("simd") {
  TEST_CASE("axpy mod p: AVX2 matches the scalar reference") {
    if (!avx2_supported()) {
      MESSAGE("AVX2/FMA not available; only the scalar path is exercised");
      return;
    }
    std::mt19937_64 rng(1);
    for (auto p : prepass_primes()) {
      std::uniform_int_distribution<std::uint32_t> res(0, p - 1);
      for (std::size_t len : {0u, 1u, 3u, 4u, 7u, 64u, 1001u}) {
        std::vector<double> x(len), y(len);
        for (auto& v : x) v = res(rng);
        for (auto& v : y) v = res(rng);
        for (double f : {0.0, 1.0, static_cast<double>(p - 1), static_cast<double>(res(rng))}) {
          auto ys = y, yv = y;
          axpy_mod_scalar(ys.data(), x.data(), f, len, p);
          axpy_mod_avx2(yv.data(), x.data(), f, len, p);
          CHECK(ys == yv);
          for (double v : yv) CHECK((v >= 0 && v < p));
        }
      }
    }
  }

  TEST_CASE("rank mod p agrees across instruction sets") {
    std::mt19937_64 rng(2);
    const std::uint32_t p = prepass_primes().front();
    std::uniform_int_distribution<std::uint32_t> res(0, p - 1);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t rows = 5 + trial % 7, cols = 4 + trial % 9;
      std::vector<std::vector<double>> m(rows, std::vector<double>(cols));
      for (auto& r : m)
        for (auto& v : r) v = res(rng);
      // duplicate a row so the rank is not always full
      m.back() = m.front();
      const auto expected = rank_mod_p(m, p, Isa::scalar);
      CHECK(expected <= std::min(rows - 1, cols));
      if (avx2_supported()) CHECK(rank_mod_p(m, p, Isa::avx2) == expected);
    }
  }

  TEST_CASE("environment override") {
    setenv("TAUT_SIMD", "scalar", 1);
    CHECK(active_isa() == Isa::scalar);
    unsetenv("TAUT_SIMD");
    CHECK(active_isa() == (avx2_supported() ? Isa::avx2 : Isa::scalar));
    CHECK(to_string(Isa::avx2) == "avx2");
  }
}
