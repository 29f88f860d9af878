#include "casimir/simd/kernels.hpp"

#if defined(__aarch64__)
#define CASIMIR_HAVE_NEON 1
#include <arm_neon.h>
#else
#define CASIMIR_HAVE_NEON 0
#endif

namespace casimir::simd::detail {

#if CASIMIR_HAVE_NEON

bool neon_compiled() { return true; }

// Two lanes per step; same operation order as the scalar loop, no fused ops.
void fresnel_neon(const double* y, std::size_t n, double eps_minus_1, double t2, double* r_tm,
                  double* r_te, double* om_tm, double* om_te) {
  const double eps = 1.0 + eps_minus_1;
  const float64x2_t em1 = vdupq_n_f64(eps_minus_1);
  const float64x2_t ve = vdupq_n_f64(eps);
  const float64x2_t va = vdupq_n_f64(eps_minus_1 * t2);
  const float64x2_t vt2 = vdupq_n_f64(t2);
  const float64x2_t two_plus = vdupq_n_f64(2.0 + eps_minus_1);
  const float64x2_t two = vdupq_n_f64(2.0);

  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t yi = vld1q_f64(y + i);
    const float64x2_t y2 = vmulq_f64(yi, yi);
    const float64x2_t s = vsqrtq_f64(vaddq_f64(y2, va));
    const float64x2_t d_tm = vaddq_f64(vmulq_f64(ve, yi), s);
    const float64x2_t d_te = vaddq_f64(s, yi);
    const float64x2_t num_tm = vmulq_f64(em1, vsubq_f64(vmulq_f64(two_plus, y2), vt2));
    vst1q_f64(r_tm + i, vdivq_f64(num_tm, vmulq_f64(d_tm, d_tm)));
    vst1q_f64(r_te + i, vdivq_f64(va, vmulq_f64(d_te, d_te)));
    vst1q_f64(om_tm + i, vdivq_f64(vmulq_f64(two, s), d_tm));
    vst1q_f64(om_te + i, vdivq_f64(vmulq_f64(two, yi), d_te));
  }
  if (i < n) fresnel_scalar(y + i, n - i, eps_minus_1, t2, r_tm + i, r_te + i, om_tm + i, om_te + i);
}

#else

bool neon_compiled() { return false; }
void fresnel_neon(const double*, std::size_t, double, double, double*, double*, double*, double*) {}

#endif

}  // namespace casimir::simd::detail
