// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include "kernels_impl.hpp"

namespace hotspots::simd::detail::avx2 {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

void stencil(const RawStencil& a) {
  const std::size_t s = a.stride;
  const __m256d scale = _mm256_set1_pd(a.scale);
  const __m256d shift = _mm256_set1_pd(a.shift);
  std::size_t i = a.begin;
  for (; i + 4 <= a.end; i += 4) {
    const __m256d xc = _mm256_loadu_pd(a.x + i);
    __m256d nb = _mm256_add_pd(_mm256_loadu_pd(a.x + i - 1), _mm256_loadu_pd(a.x + i + 1));
    nb = _mm256_add_pd(nb, _mm256_add_pd(_mm256_loadu_pd(a.x + i - s), _mm256_loadu_pd(a.x + i + s)));
    const __m256d coeff = _mm256_fmadd_pd(scale, _mm256_loadu_pd(a.diag + i), shift);
    const __m256d value = _mm256_fmsub_pd(coeff, xc, _mm256_mul_pd(scale, nb));
    _mm256_storeu_pd(a.y + i, _mm256_mul_pd(_mm256_loadu_pd(a.mask + i), value));
  }
  for (; i < a.end; ++i) {
    const double neighbors = a.x[i - 1] + a.x[i + 1] + a.x[i - s] + a.x[i + s];
    a.y[i] = a.mask[i] * ((a.shift + a.scale * a.diag[i]) * a.x[i] - a.scale * neighbors);
  }
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void xpay(const double* x, double b, double* y, std::size_t n) {
  const __m256d bv = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(bv, _mm256_loadu_pd(y + i), _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) y[i] = x[i] + b * y[i];
}

double sum(const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += x[i];
  return acc;
}

}  // namespace hotspots::simd::detail::avx2
