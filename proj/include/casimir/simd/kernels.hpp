#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops of the Lifshitz engine. Everything is expressed in the
// dimensionless decay variable y = 2 q z (q the vacuum decay wavenumber, z the gap)
// and t = 2 xi z / c, so that y >= t on the integration range and the kernel decays
// like exp(-y).
//
// Every kernel exists as a scalar reference and as vector variants selected at
// runtime. The Fresnel kernel uses only + - * / sqrt and rounds identically in all
// variants; the Lifshitz kernel uses in-house exp/log polynomials in the vector
// variants and agrees with the scalar reference to a few ulp.

namespace casimir::simd {

/// r_tm, r_te and their complements 1 - r for a permittivity model at fixed xi.
/// eps_minus_1 = eps(i xi) - 1, t2 = t^2. The complements are formed without
/// cancellation so that 1 - r1 r2 stays accurate for near-ideal reflectors.
using FresnelFn = void (*)(const double* y, std::size_t n, double eps_minus_1, double t2,
                           double* r_tm, double* r_te, double* om_tm, double* om_te);

enum class Quantity { free_energy, pressure };

/// Integrand of one polarization: free energy  y   ln(1 - rr e^-y)
///                                  pressure    y^2 rr e^-y / (1 - rr e^-y)
/// where rr is the product of the two plates' coefficients and omrr = 1 - rr.
using LifshitzFn = void (*)(const double* y, const double* rr, const double* omrr, std::size_t n,
                            Quantity quantity, double* out);

struct KernelTable {
  std::string_view name;
  FresnelFn fresnel;
  LifshitzFn lifshitz;
};

const KernelTable& scalar_kernels();
/// nullptr when the variant is not compiled in or the CPU lacks the instructions.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Best variant for the running CPU, chosen once on first use.
const KernelTable& active_kernels();

// Span conveniences over the active table.
void fresnel(std::span<const double> y, double eps_minus_1, double t2, std::span<double> r_tm,
             std::span<double> r_te, std::span<double> om_tm, std::span<double> om_te);
void lifshitz_integrand(std::span<const double> y, std::span<const double> rr,
                        std::span<const double> omrr, Quantity quantity, std::span<double> out);

namespace detail {
// Variant entry points, defined in their own translation units.
void fresnel_scalar(const double*, std::size_t, double, double, double*, double*, double*, double*);
void lifshitz_scalar(const double*, const double*, const double*, std::size_t, Quantity, double*);
bool avx2_compiled();
void fresnel_avx2(const double*, std::size_t, double, double, double*, double*, double*, double*);
void lifshitz_avx2(const double*, const double*, const double*, std::size_t, Quantity, double*);
bool neon_compiled();
void fresnel_neon(const double*, std::size_t, double, double, double*, double*, double*, double*);
}  // namespace detail

}  // namespace casimir::simd
