#include <cmath>

#include "taut/simd/modp.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define TAUT_HAVE_X86 1
#endif

namespace taut::simd {

#ifdef TAUT_HAVE_X86

__attribute__((target("avx2,fma"))) void axpy_mod_avx2(double* y, const double* x, double f, std::size_t len,
                                                       double p) {
  const __m256d vp = _mm256_set1_pd(p);
  const __m256d vinv = _mm256_set1_pd(1.0 / p);
  const __m256d vf = _mm256_set1_pd(f);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vy = _mm256_loadu_pd(y + i);
    // t = y - f*x is exact: |f*x| < 2^52
    const __m256d t = _mm256_fnmadd_pd(vf, vx, vy);
    const __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vinv));
    __m256d r = _mm256_fnmadd_pd(q, vp, t);
    // q may be off by one in either direction
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
    _mm256_storeu_pd(y + i, r);
  }
  if (i < len) axpy_mod_scalar(y + i, x + i, f, len - i, p);
}

#else

void axpy_mod_avx2(double* y, const double* x, double f, std::size_t len, double p) {
  axpy_mod_scalar(y, x, f, len, p);
}

#endif

}  // namespace taut::simd
