#include <cmath>

#include "cmcf/simd/kernels.h"

namespace cmcf {
namespace simd {
namespace {

double DotScalar(const double* x, const double* y, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

void AxpyScalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void MaxPlusScalar(const double* base, const double* shifted, double add,
                   double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double candidate = shifted[i] + add;
    out[i] = candidate > base[i] ? candidate : base[i];
  }
}

std::size_t ArgMaxAbsScalar(const double* x, std::size_t n) {
  std::size_t best = n;
  double best_value = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = std::fabs(x[i]);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  return best;
}

}  // namespace

const KernelTable& ScalarKernels() {
  static const KernelTable table{"scalar", DotScalar, AxpyScalar,
                                 MaxPlusScalar, ArgMaxAbsScalar};
  return table;
}

}  // namespace simd
}  // namespace cmcf
