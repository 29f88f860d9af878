#include "casimir/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define CASIMIR_HAVE_AVX2 1
#include <immintrin.h>
#else
#define CASIMIR_HAVE_AVX2 0
#endif

namespace casimir::simd::detail {

#if CASIMIR_HAVE_AVX2

bool avx2_compiled() { return true; }

// Fresnel uses plain AVX (no FMA) so every lane rounds exactly like the scalar loop.
__attribute__((target("avx2"))) void fresnel_avx2(const double* y, std::size_t n,
                                                  double eps_minus_1, double t2, double* r_tm,
                                                  double* r_te, double* om_tm, double* om_te) {
  const double eps = 1.0 + eps_minus_1;
  const double a_s = eps_minus_1 * t2;
  const double two_plus_s = 2.0 + eps_minus_1;
  const __m256d em1 = _mm256_set1_pd(eps_minus_1);
  const __m256d ve = _mm256_set1_pd(eps);
  const __m256d va = _mm256_set1_pd(a_s);
  const __m256d vt2 = _mm256_set1_pd(t2);
  const __m256d two_plus = _mm256_set1_pd(two_plus_s);
  const __m256d two = _mm256_set1_pd(2.0);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d yi = _mm256_loadu_pd(y + i);
    const __m256d y2 = _mm256_mul_pd(yi, yi);
    const __m256d s = _mm256_sqrt_pd(_mm256_add_pd(y2, va));
    const __m256d d_tm = _mm256_add_pd(_mm256_mul_pd(ve, yi), s);
    const __m256d d_te = _mm256_add_pd(s, yi);
    const __m256d num_tm = _mm256_mul_pd(em1, _mm256_sub_pd(_mm256_mul_pd(two_plus, y2), vt2));
    _mm256_storeu_pd(r_tm + i, _mm256_div_pd(num_tm, _mm256_mul_pd(d_tm, d_tm)));
    _mm256_storeu_pd(r_te + i, _mm256_div_pd(va, _mm256_mul_pd(d_te, d_te)));
    _mm256_storeu_pd(om_tm + i, _mm256_div_pd(_mm256_mul_pd(two, s), d_tm));
    _mm256_storeu_pd(om_te + i, _mm256_div_pd(_mm256_mul_pd(two, yi), d_te));
  }
  if (i < n) fresnel_scalar(y + i, n - i, eps_minus_1, t2, r_tm + i, r_te + i, om_tm + i, om_te + i);
}

namespace {

// exp(x) for x <= 0. Cody-Waite reduction by ln 2, degree-13 Taylor polynomial on
// |r| <= ln2/2, exponent assembled from bits. Inputs below -708 return 0.
__attribute__((target("avx2,fma"))) inline __m256d exp_nonpositive(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
  const __m256d lower = _mm256_set1_pd(-708.0);

  const __m256d underflow = _mm256_cmp_pd(x, lower, _CMP_LT_OQ);
  x = _mm256_max_pd(x, lower);
  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, ln2_hi, x);
  r = _mm256_fnmadd_pd(k, ln2_lo, r);

  // 1/j! for j = 13 .. 2
  static constexpr double inv_fact[] = {
      1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0,
      1.0 / 362880.0,     1.0 / 40320.0,     1.0 / 5040.0,     1.0 / 720.0,
      1.0 / 120.0,        1.0 / 24.0,        1.0 / 6.0,        0.5};
  __m256d p = _mm256_set1_pd(inv_fact[0]);
  for (int j = 1; j < 12; ++j) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_fact[j]));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));

  const __m128i ki = _mm256_cvtpd_epi32(k);
  __m256i bits = _mm256_cvtepi32_epi64(ki);
  bits = _mm256_slli_epi64(_mm256_add_epi64(bits, _mm256_set1_epi64x(1023)), 52);
  const __m256d result = _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
  return _mm256_andnot_pd(underflow, result);
}

// Natural log of positive normal doubles: mantissa folded into [sqrt(1/2), sqrt(2)),
// log(m) = 2 atanh(s), s = (m-1)/(m+1), odd series to s^21.
__attribute__((target("avx2,fma"))) inline __m256d log_positive(__m256d v) {
  const __m256i bits = _mm256_castpd_si256(v);
  const __m256i exp_mask = _mm256_set1_epi64x(0x7ff0000000000000LL);
  const __m256i mant_mask = _mm256_set1_epi64x(0x000fffffffffffffLL);
  const __m256i one_bits = _mm256_set1_epi64x(0x3ff0000000000000LL);

  __m256i e = _mm256_sub_epi64(_mm256_srli_epi64(_mm256_and_si256(bits, exp_mask), 52),
                               _mm256_set1_epi64x(1023));
  __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_bits));

  const __m256d sqrt2 = _mm256_set1_pd(1.41421356237309504880);
  const __m256d big = _mm256_cmp_pd(m, sqrt2, _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
  e = _mm256_add_epi64(e, _mm256_and_si256(_mm256_castpd_si256(big), _mm256_set1_epi64x(1)));

  // int64 -> double for small exponents: pack the low 32 bits and convert.
  const __m256i perm = _mm256_permutevar8x32_epi32(e, _mm256_setr_epi32(0, 2, 4, 6, 0, 2, 4, 6));
  const __m256d ed = _mm256_cvtepi32_pd(_mm256_castsi256_si128(perm));

  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  const __m256d z = _mm256_mul_pd(s, s);
  static constexpr double coeff[] = {1.0 / 21, 1.0 / 19, 1.0 / 17, 1.0 / 15, 1.0 / 13, 1.0 / 11,
                                     1.0 / 9,  1.0 / 7,  1.0 / 5,  1.0 / 3};
  __m256d p = _mm256_set1_pd(coeff[0]);
  for (int j = 1; j < 10; ++j) p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(coeff[j]));
  // 2 s (1 + z p) = 2 s + 2 s z p
  const __m256d two_s = _mm256_add_pd(s, s);
  const __m256d logm = _mm256_fmadd_pd(_mm256_mul_pd(two_s, z), p, two_s);

  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
  return _mm256_fmadd_pd(ed, ln2_hi, _mm256_fmadd_pd(ed, ln2_lo, logm));
}

// log1p(u) for u in [-0.5, 0]: w = 1 + u, log(w) * u / (w - 1), exact when w == 1.
__attribute__((target("avx2,fma"))) inline __m256d log1p_small(__m256d u) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d w = _mm256_add_pd(one, u);
  const __m256d wm1 = _mm256_sub_pd(w, one);
  const __m256d is_one = _mm256_cmp_pd(wm1, _mm256_setzero_pd(), _CMP_EQ_OQ);
  const __m256d safe_w = _mm256_blendv_pd(w, _mm256_set1_pd(0.5), is_one);
  const __m256d safe_wm1 = _mm256_blendv_pd(wm1, _mm256_set1_pd(-0.5), is_one);
  const __m256d corrected = _mm256_mul_pd(log_positive(safe_w), _mm256_div_pd(u, safe_wm1));
  return _mm256_blendv_pd(corrected, u, is_one);
}

}  // namespace

__attribute__((target("avx2,fma"))) void lifshitz_avx2(const double* y, const double* rr,
                                                       const double* omrr, std::size_t n,
                                                       Quantity quantity, double* out) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d yi = _mm256_loadu_pd(y + i);
    const __m256d r = _mm256_loadu_pd(rr + i);
    const __m256d om = _mm256_loadu_pd(omrr + i);
    const __m256d e = exp_nonpositive(_mm256_sub_pd(_mm256_setzero_pd(), yi));
    const __m256d x = _mm256_mul_pd(r, e);
    const __m256d den = _mm256_add_pd(om, _mm256_mul_pd(r, _mm256_sub_pd(one, e)));
    __m256d value;
    if (quantity == Quantity::free_energy) {
      const __m256d small = _mm256_cmp_pd(x, half, _CMP_LE_OQ);
      const __m256d neg_x = _mm256_sub_pd(_mm256_setzero_pd(), _mm256_min_pd(x, half));
      // keep log's argument positive in lanes where den underflows the other branch
      const __m256d safe_den = _mm256_max_pd(den, _mm256_set1_pd(1e-300));
      value = _mm256_blendv_pd(log_positive(safe_den), log1p_small(neg_x), small);
      value = _mm256_mul_pd(yi, value);
    } else {
      value = _mm256_mul_pd(_mm256_mul_pd(yi, yi), _mm256_div_pd(x, den));
    }
    _mm256_storeu_pd(out + i, value);
  }
  if (i < n) lifshitz_scalar(y + i, rr + i, omrr + i, n - i, quantity, out + i);
}

#else

bool avx2_compiled() { return false; }
void fresnel_avx2(const double*, std::size_t, double, double, double*, double*, double*, double*) {}
void lifshitz_avx2(const double*, const double*, const double*, std::size_t, Quantity, double*) {}

#endif

}  // namespace casimir::simd::detail
