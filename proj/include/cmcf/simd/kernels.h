#ifndef CMCF_SIMD_KERNELS_H_
#define CMCF_SIMD_KERNELS_H_

#include <cstddef>
#include <span>
#include <string_view>

namespace cmcf {
namespace simd {

// Dense double-precision inner loops shared by the simplex engine and the
// knapsack pattern pricer. Every table entry has the same contract in every
// implementation; only summation order may differ (Dot).
struct KernelTable {
  std::string_view name;

  // Returns sum_i x[i] * y[i]. Sizes must match.
  double (*dot)(const double* x, const double* y, std::size_t n);

  // y[i] += alpha * x[i]. Bit-identical across implementations (no FMA).
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

  // out[i] = max(base[i], shifted[i] + add). -inf entries are allowed.
  void (*max_plus)(const double* base, const double* shifted, double add,
                   double* out, std::size_t n);

  // Index of the largest |x[i]| (first on ties), n when n == 0.
  std::size_t (*arg_max_abs)(const double* x, std::size_t n);
};

const KernelTable& ScalarKernels();

// nullptr when the AVX2 table was not compiled in or the CPU lacks AVX2.
const KernelTable* Avx2Kernels();

// Table used by the solvers. Picks AVX2 when available unless the
// environment variable CMCF_SIMD is set to "scalar". Resolved once.
const KernelTable& ActiveKernels();

inline double Dot(std::span<const double> x, std::span<const double> y) {
  return ActiveKernels().dot(x.data(), y.data(), x.size());
}

inline void Axpy(double alpha, std::span<const double> x, std::span<double> y) {
  ActiveKernels().axpy(alpha, x.data(), y.data(), x.size());
}

inline void MaxPlus(std::span<const double> base,
                    std::span<const double> shifted, double add,
                    std::span<double> out) {
  ActiveKernels().max_plus(base.data(), shifted.data(), add, out.data(),
                           out.size());
}

inline std::size_t ArgMaxAbs(std::span<const double> x) {
  return ActiveKernels().arg_max_abs(x.data(), x.size());
}

}  // namespace simd
}  // namespace cmcf

#endif  // CMCF_SIMD_KERNELS_H_
