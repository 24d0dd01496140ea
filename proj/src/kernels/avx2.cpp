#include <immintrin.h>

#include "cograph/kernels.hpp"

namespace cograph::kernels::avx2 {

namespace {

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k + 4), _mm256_loadu_pd(b + k + 4), acc1);
  }
  for (; k + 4 <= n; k += 4) acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; k < n; ++k) s += a[k] * b[k];
  return s;
}

double dot_reversed(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  // b[n-1-k .. n-4-k] reversed is b[n-4-k .. n-1-k] with lanes flipped.
  for (; k + 8 <= n; k += 8) {
    const __m256d b0 = _mm256_permute4x64_pd(_mm256_loadu_pd(b + n - 4 - k), 0x1B);
    const __m256d b1 = _mm256_permute4x64_pd(_mm256_loadu_pd(b + n - 8 - k), 0x1B);
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), b0, acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k + 4), b1, acc1);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; k < n; ++k) s += a[k] * b[n - 1 - k];
  return s;
}

}  // namespace cograph::kernels::avx2
