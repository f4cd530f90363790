#include <immintrin.h>

#include <cmath>

#include "cmcf/simd/kernels.h"

namespace cmcf {
namespace simd {
namespace internal {

namespace {

double DotAvx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(x + i),
                                             _mm256_loadu_pd(y + i)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(x + i + 4),
                                             _mm256_loadu_pd(y + i + 4)));
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(x + i),
                                             _mm256_loadu_pd(y + i)));
  }
  acc0 = _mm256_add_pd(acc0, acc1);
  __m128d lo = _mm256_castpd256_pd128(acc0);
  __m128d hi = _mm256_extractf128_pd(acc0, 1);
  lo = _mm_add_pd(lo, hi);
  double sum = _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
  for (; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

// Multiply then add, never fused, so results match the scalar table bit for
// bit.
void AxpyAvx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d prod = _mm256_mul_pd(a, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void MaxPlusAvx2(const double* base, const double* shifted, double add,
                 double* out, std::size_t n) {
  const __m256d a = _mm256_set1_pd(add);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d candidate = _mm256_add_pd(_mm256_loadu_pd(shifted + i), a);
    __m256d b = _mm256_loadu_pd(base + i);
    // Keep base on ties, like the scalar "candidate > base" test.
    __m256d gt = _mm256_cmp_pd(candidate, b, _CMP_GT_OQ);
    _mm256_storeu_pd(out + i, _mm256_blendv_pd(b, candidate, gt));
  }
  for (; i < n; ++i) {
    double candidate = shifted[i] + add;
    out[i] = candidate > base[i] ? candidate : base[i];
  }
}

std::size_t ArgMaxAbsAvx2(const double* x, std::size_t n) {
  if (n == 0) return 0;
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  double best_value = -1.0;
  if (n >= 4) {
    __m256d best = _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(x));
    for (i = 4; i + 4 <= n; i += 4) {
      best = _mm256_max_pd(best, _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(x + i)));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, best);
    best_value = std::fmax(std::fmax(lanes[0], lanes[1]),
                           std::fmax(lanes[2], lanes[3]));
  }
  for (std::size_t j = i; j < n; ++j) best_value = std::fmax(best_value, std::fabs(x[j]));
  // Second pass finds the first index attaining the maximum.
  for (std::size_t j = 0; j < n; ++j) {
    if (std::fabs(x[j]) == best_value) return j;
  }
  return n;
}

}  // namespace

const KernelTable& Avx2Table() {
  static const KernelTable table{"avx2", DotAvx2, AxpyAvx2, MaxPlusAvx2,
                                 ArgMaxAbsAvx2};
  return table;
}

}  // namespace internal
}  // namespace simd
}  // namespace cmcf
