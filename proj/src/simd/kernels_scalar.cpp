#include <cmath>

#include "casimir/simd/kernels.hpp"

namespace casimir::simd::detail {

void fresnel_scalar(const double* y, std::size_t n, double eps_minus_1, double t2, double* r_tm,
                    double* r_te, double* om_tm, double* om_te) {
  const double eps = 1.0 + eps_minus_1;
  const double a = eps_minus_1 * t2;
  const double two_plus = 2.0 + eps_minus_1;
  for (std::size_t i = 0; i < n; ++i) {
    const double yi = y[i];
    const double y2 = yi * yi;
    const double s = std::sqrt(y2 + a);
    const double d_tm = eps * yi + s;
    const double d_te = s + yi;
    // eps y - s = (eps-1)((eps+1) y^2 - t^2) / (eps y + s); s - y = a / (s + y)
    r_tm[i] = eps_minus_1 * (two_plus * y2 - t2) / (d_tm * d_tm);
    r_te[i] = a / (d_te * d_te);
    om_tm[i] = 2.0 * s / d_tm;
    om_te[i] = 2.0 * yi / d_te;
  }
}

void lifshitz_scalar(const double* y, const double* rr, const double* omrr, std::size_t n,
                     Quantity quantity, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double e = std::exp(-y[i]);
    const double x = rr[i] * e;
    const double den = omrr[i] + rr[i] * (1.0 - e);
    if (quantity == Quantity::free_energy) {
      out[i] = y[i] * (x <= 0.5 ? std::log1p(-x) : std::log(den));
    } else {
      out[i] = y[i] * y[i] * (x / den);
    }
  }
}

}  // namespace casimir::simd::detail
