#include "casimir/lifshitz.hpp"

#include <array>
#include <cmath>
#include <string>

#include "casimir/error.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/simd/kernels.hpp"
#include "casimir/summation.hpp"

namespace casimir {

namespace {

using simd::Quantity;
using Batch = std::array<double, quad::kNodes>;

constexpr double kPi = PhysicalConstants::pi;
// Integration range in y beyond t; the kernel is below e^-64 relative past it.
constexpr std::array<double, 9> kOffsets = {0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0};
constexpr std::array<double, 10> kOuterBreaks = {0.0, 0.25, 0.5, 1.0, 2.0,
                                                 4.0, 8.0,  16.0, 32.0, 64.0};
constexpr int kMaxPanels = 4000;
// Beyond this t the whole term is below e^-650 and underflows toward subnormals.
constexpr double kNegligibleT = 650.0;

bool same_material(const MaterialModel& a, const MaterialModel& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case MaterialKind::ideal_metal: return true;
    case MaterialKind::plasma:
    case MaterialKind::impedance: return a.omega_p() == b.omega_p();
    case MaterialKind::drude: return a.omega_p() == b.omega_p() && a.gamma() == b.gamma();
    case MaterialKind::tabulated:
      return &a.table() == &b.table() && a.extension().kind == b.extension().kind &&
             a.extension().omega_p == b.extension().omega_p &&
             a.extension().gamma == b.extension().gamma;
  }
  return false;
}

// Integrand of one Matsubara term over a panel of y nodes, summed over polarizations.
struct TermIntegrand {
  const PlateResponse& plate_1;
  const PlateResponse& plate_2;
  bool symmetric;
  Quantity quantity;

  void operator()(std::span<const double> y, std::span<double> out) const {
    Batch r1_tm{}, r1_te{}, o1_tm{}, o1_te{};
    Batch r2_tm{}, r2_te{}, o2_tm{}, o2_te{};
    Batch rr{}, om{}, te{};
    const std::size_t n = y.size();
    plate_1.evaluate(y, r1_tm, r1_te, o1_tm, o1_te);
    if (symmetric) {
      r2_tm = r1_tm;
      r2_te = r1_te;
      o2_tm = o1_tm;
      o2_te = o1_te;
    } else {
      plate_2.evaluate(y, r2_tm, r2_te, o2_tm, o2_te);
    }
    // 1 - r1 r2 = (1 - r1) + r1 (1 - r2)
    for (std::size_t i = 0; i < n; ++i) {
      rr[i] = r1_tm[i] * r2_tm[i];
      om[i] = o1_tm[i] + r1_tm[i] * o2_tm[i];
    }
    simd::lifshitz_integrand(y, std::span<const double>(rr.data(), n),
                             std::span<const double>(om.data(), n), quantity, out);
    for (std::size_t i = 0; i < n; ++i) {
      rr[i] = r1_te[i] * r2_te[i];
      om[i] = o1_te[i] + r1_te[i] * o2_te[i];
    }
    simd::lifshitz_integrand(y, std::span<const double>(rr.data(), n),
                             std::span<const double>(om.data(), n), quantity,
                             std::span<double>(te.data(), n));
    for (std::size_t i = 0; i < n; ++i) out[i] += te[i];
  }
};

// int_t^inf of the term integrand in y.
quad::Result term_integral(const PlateResponse& p1, const PlateResponse& p2, bool symmetric,
                           double t, Quantity quantity, double rel_tol) {
  if (p1.vanishes() || p2.vanishes() || t > kNegligibleT) return {};
  std::array<double, kOffsets.size()> bp{};
  for (std::size_t i = 0; i < bp.size(); ++i) bp[i] = t + kOffsets[i];
  TermIntegrand f{p1, p2, symmetric, quantity};
  auto r = quad::integrate(f, std::span<const double>(bp), rel_tol, 0.0, kMaxPanels);
  if (!r.converged) {
    throw NumericError("Lifshitz wavenumber integral did not converge at t = " + NumericError::format(t),
                       r.value, r.error);
  }
  return r;
}

// Closed form of int_0^inf for constant coefficient products in {0, 1}:
//   y ln(1 - e^-y) -> -zeta(3),   y^2 e^-y / (1 - e^-y) -> 2 zeta(3).
bool closed_form_zero_term(const PlateResponse& p1, const PlateResponse& p2, Quantity quantity,
                           double& value) {
  if (!p1.is_constant() || !p2.is_constant()) return false;
  const auto a = p1.constant_pair();
  const auto b = p2.constant_pair();
  const double rr[2] = {a.r_par * b.r_par, a.r_perp * b.r_perp};
  const double unit = quantity == Quantity::free_energy ? -PhysicalConstants::zeta3
                                                        : 2.0 * PhysicalConstants::zeta3;
  value = 0.0;
  for (double p : rr) {
    if (p == 1.0) {
      value += unit;
    } else if (p != 0.0) {
      return false;
    }
  }
  return true;
}

// Dimensionless y-integral of the l = 0 term (without the 1/2 weight).
quad::Result zero_term_integral(const PlateConfig& cfg, Quantity quantity, double rel_tol) {
  const auto p1 = PlateResponse::at_zero_frequency(cfg.material_1, cfg.zero_freq, cfg.z);
  const auto p2 = PlateResponse::at_zero_frequency(cfg.material_2, cfg.zero_freq, cfg.z);
  double closed = 0.0;
  if (closed_form_zero_term(p1, p2, quantity, closed)) return {closed, 0.0, 0, true};
  return term_integral(p1, p2, same_material(cfg.material_1, cfg.material_2), 0.0, quantity,
                       rel_tol);
}

double matsubara_prefactor(double T, double z, Quantity quantity) {
  const double kt = PhysicalConstants::k_B * T;
  return quantity == Quantity::free_energy ? kt / (8.0 * kPi * z * z)
                                           : -kt / (8.0 * kPi * z * z * z);
}

MatsubaraResult matsubara_sum(const PlateConfig& cfg, const ThermalState& ts, Quantity quantity) {
  cfg.validate();
  ts.validate();
  const auto& tol = ts.tolerances;
  const double z = cfg.z;
  const double prefactor = matsubara_prefactor(ts.T, z, quantity);
  const bool symmetric = same_material(cfg.material_1, cfg.material_2);

  MatsubaraResult out;
  const auto zero = zero_term_integral(cfg, quantity, tol.rel_quad);
  const double term0 = 0.5 * prefactor * zero.value;
  out.per_l.push_back(term0);
  CompensatedSum error;
  error.add(0.5 * std::abs(prefactor) * zero.error);

  // Stopping is judged against the l >= 1 partial sum only, so two configurations
  // differing just in the zero-frequency rule sum exactly the same l >= 1 terms.
  CompensatedSum rest;
  const double xi1 = matsubara_frequency(ts.T, 1);
  int small_run = 0;
  double previous = 0.0;
  double last = 0.0;
  long l = 1;
  for (;; ++l) {
    if (l > ts.max_terms) {
      throw NumericError("Matsubara sum exceeded " + std::to_string(ts.max_terms) + " terms",
                         term0 + rest.value(), std::abs(last) * static_cast<double>(l));
    }
    const double xi = static_cast<double>(l) * xi1;
    const double t = 2.0 * xi * z / PhysicalConstants::c;
    const auto p1 = PlateResponse::at_frequency(cfg.material_1, xi, z);
    const auto p2 = symmetric ? p1 : PlateResponse::at_frequency(cfg.material_2, xi, z);
    const auto r = term_integral(p1, p2, symmetric, t, quantity, tol.rel_quad);
    const double term = prefactor * r.value;
    out.per_l.push_back(term);
    rest.add(term);
    error.add(std::abs(prefactor) * r.error);
    previous = last;
    last = term;
    if (std::abs(term) <= tol.rel_sum_tail * std::abs(rest.value())) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
  }
  out.l_max = l;

  double tail = 0.0;
  if (previous != 0.0) {
    const double ratio = last / previous;
    if (ratio > 0.0 && ratio < 1.0) tail = last * ratio / (1.0 - ratio);
  }
  rest.add(tail);
  out.truncation_estimate = tail;

  CompensatedSum total;
  total.add(term0);
  total.add(rest.value());
  out.value = total.value();
  out.error_estimate = error.value() + std::abs(tail);
  return out;
}

double zero_temperature_integral(const PlateConfig& cfg, const Tolerances& tol, Quantity quantity) {
  cfg.validate();
  tol.validate();
  const double z = cfg.z;
  const bool symmetric = same_material(cfg.material_1, cfg.material_2);
  const double inner_tol = 0.1 * tol.rel_quad;
  auto outer = [&](std::span<const double> t, std::span<double> out) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double xi = t[i] * PhysicalConstants::c / (2.0 * z);
      const auto p1 = PlateResponse::at_frequency(cfg.material_1, xi, z);
      const auto p2 = symmetric ? p1 : PlateResponse::at_frequency(cfg.material_2, xi, z);
      out[i] = term_integral(p1, p2, symmetric, t[i], quantity, inner_tol).value;
    }
  };
  const auto r = quad::integrate(outer, std::span<const double>(kOuterBreaks), tol.rel_quad, 0.0,
                                 kMaxPanels);
  if (!r.converged) {
    throw NumericError("zero-temperature frequency integral did not converge", r.value, r.error);
  }
  return r.value;
}

}  // namespace

void PlateConfig::validate() const {
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("plate separation z must be > 0");
  check_compatible(material_1, zero_freq);
  check_compatible(material_2, zero_freq);
}

PlateConfig PlateConfig::symmetric(const MaterialModel& m, double z) {
  return symmetric(m, z, natural_prescription(m));
}

PlateConfig PlateConfig::symmetric(const MaterialModel& m, double z, Prescription p) {
  return PlateConfig{m, m, z, p};
}

void ThermalState::validate() const {
  if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("temperature must be >= 0");
  tolerances.validate();
  if (max_terms < 1) throw DomainError("max_terms must be >= 1");
}

FreeEnergyResult free_energy(const PlateConfig& cfg, const ThermalState& ts) {
  ts.validate();
  if (ts.T == 0.0) {
    FreeEnergyResult r;
    r.value = zero_temperature_free_energy(cfg, ts.tolerances);
    r.error_estimate = ts.tolerances.rel_quad * std::abs(r.value);
    return r;
  }
  return matsubara_sum(cfg, ts, Quantity::free_energy);
}

MatsubaraResult pressure_terms(const PlateConfig& cfg, const ThermalState& ts) {
  ts.validate();
  if (ts.T == 0.0) {
    MatsubaraResult r;
    r.value = zero_temperature_pressure(cfg, ts.tolerances);
    r.error_estimate = ts.tolerances.rel_quad * std::abs(r.value);
    return r;
  }
  return matsubara_sum(cfg, ts, Quantity::pressure);
}

double pressure(const PlateConfig& cfg, const ThermalState& ts) {
  return pressure_terms(cfg, ts).value;
}

double zero_temperature_free_energy(const PlateConfig& cfg, const Tolerances& tol) {
  const double z = cfg.z;
  return PhysicalConstants::hbar_c / (32.0 * kPi * kPi * z * z * z) *
         zero_temperature_integral(cfg, tol, Quantity::free_energy);
}

double zero_temperature_pressure(const PlateConfig& cfg, const Tolerances& tol) {
  const double z = cfg.z;
  return -PhysicalConstants::hbar_c / (32.0 * kPi * kPi * z * z * z * z) *
         zero_temperature_integral(cfg, tol, Quantity::pressure);
}

double classical_term(const PlateConfig& cfg, const ThermalState& ts) {
  cfg.validate();
  ts.validate();
  if (ts.T == 0.0) return 0.0;
  const auto zero = zero_term_integral(cfg, Quantity::pressure, ts.tolerances.rel_quad);
  return 0.5 * matsubara_prefactor(ts.T, cfg.z, Quantity::pressure) * zero.value;
}

double entropy(const PlateConfig& cfg, double T, const Tolerances& tol) {
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("entropy: temperature must be > 0");
  ThermalState ts{T, tol};
  double noise = 0.0;
  auto f_at = [&](double temperature) {
    ts.T = temperature;
    const auto r = matsubara_sum(cfg, ts, Quantity::free_energy);
    noise = std::max(noise, r.error_estimate);
    return r.value;
  };
  auto central = [&](double step) { return (f_at(T + step) - f_at(T - step)) / (2.0 * step); };

  const double h = 0.04 * T;
  const double d1 = central(h);
  const double d2 = central(0.5 * h);
  const double d3 = central(0.25 * h);
  const double coarse = (4.0 * d2 - d1) / 3.0;
  const double fine = (4.0 * d3 - d2) / 3.0;
  const double floor = 4.0 * noise / (0.25 * h);
  if (std::abs(coarse - fine) > tol.rel_deriv * std::abs(fine) + floor) {
    throw NumericError("entropy: Richardson estimates disagree (coarse " +
                           std::to_string(-coarse) + ")",
                       -fine, std::abs(coarse - fine));
  }
  return -fine;
}

}  // namespace casimir
