#include <cassert>

#include "casimir/simd/kernels.hpp"

namespace casimir::simd {

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", detail::fresnel_scalar, detail::lifshitz_scalar};
  return table;
}

const KernelTable* avx2_kernels() {
#if defined(__x86_64__) || defined(_M_X64)
  static const bool usable = detail::avx2_compiled() && __builtin_cpu_supports("avx2") &&
                             __builtin_cpu_supports("fma");
  static const KernelTable table{"avx2", detail::fresnel_avx2, detail::lifshitz_avx2};
  return usable ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() {
  // The log/exp kernel has no NEON port; it falls back to the scalar reference.
  static const KernelTable table{"neon", detail::fresnel_neon, detail::lifshitz_scalar};
  return detail::neon_compiled() ? &table : nullptr;
}

const KernelTable& active_kernels() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    if (const KernelTable* t = avx2_kernels()) return *t;
    if (const KernelTable* t = neon_kernels()) return *t;
    return scalar_kernels();
  }();
  return chosen;
}

void fresnel(std::span<const double> y, double eps_minus_1, double t2, std::span<double> r_tm,
             std::span<double> r_te, std::span<double> om_tm, std::span<double> om_te) {
  assert(r_tm.size() >= y.size() && r_te.size() >= y.size());
  assert(om_tm.size() >= y.size() && om_te.size() >= y.size());
  active_kernels().fresnel(y.data(), y.size(), eps_minus_1, t2, r_tm.data(), r_te.data(),
                           om_tm.data(), om_te.data());
}

void lifshitz_integrand(std::span<const double> y, std::span<const double> rr,
                        std::span<const double> omrr, Quantity quantity, std::span<double> out) {
  assert(rr.size() >= y.size() && omrr.size() >= y.size() && out.size() >= y.size());
  active_kernels().lifshitz(y.data(), rr.data(), omrr.data(), y.size(), quantity, out.data());
}

}  // namespace casimir::simd
