#pragma once

#include <span>
#include <string>
#include <string_view>

#include "casimir/materials.hpp"

namespace casimir {

/// Zero-frequency rule for the l = 0 Matsubara term. The xi = 0 coefficients are
/// never obtained by evaluating eps at tiny xi; the rule is always explicit.
enum class Prescription { schwinger_ideal, drude, plasma, impedance_ir, impedance_skin };

Prescription parse_prescription(std::string_view name);
std::string_view to_string(Prescription p);

/// Default rule for a material: the one its own low-frequency behaviour implies.
Prescription natural_prescription(const MaterialModel& m);

/// Throws ConfigurationError naming both when the rule cannot be applied to m.
void check_compatible(const MaterialModel& m, Prescription p);

/// Magnitudes of the TM (parallel) and TE (perpendicular) reflection amplitudes.
/// The ideal-metal limit is +1 for both; only products r1 r2 enter the Lifshitz kernel.
struct ReflectionPair {
  double r_par = 0.0;
  double r_perp = 0.0;
};

/// Imaginary frequency xi (rad/s) and in-plane wavenumber k (1/m).
class WaveContext {
public:
  WaveContext(double xi, double k);
  double xi() const noexcept { return xi_; }
  double k() const noexcept { return k_; }
  /// Vacuum decay wavenumber sqrt(k^2 + xi^2/c^2).
  double q() const noexcept { return q_; }

private:
  double xi_;
  double k_;
  double q_;
};

/// Fresnel coefficients on the imaginary axis. Requires xi > 0.
ReflectionPair fresnel(const MaterialModel& m, const WaveContext& ctx);

/// Coefficients at xi = 0 under the chosen rule.
ReflectionPair zero_freq_limit(const MaterialModel& m, double k, Prescription p);

/// Leontovich-boundary coefficients for xi > 0:
///   r_par = (cq - xi Z)/(cq + xi Z),  r_perp = |xi - cq Z|/(xi + cq Z).
ReflectionPair impedance_reflection(const MaterialModel& m, const WaveContext& ctx);

/// One plate's response at one Matsubara term, evaluated over batches of the
/// dimensionless decay variable y = 2 q z (with t = 2 xi z / c). Fills r and 1 - r
/// for both polarizations; the complements are formed without cancellation.
class PlateResponse {
public:
  static PlateResponse at_frequency(const MaterialModel& m, double xi, double z);
  static PlateResponse at_zero_frequency(const MaterialModel& m, Prescription p, double z);

  void evaluate(std::span<const double> y, std::span<double> r_tm, std::span<double> r_te,
                std::span<double> om_tm, std::span<double> om_te) const;

  /// True when both coefficients vanish identically (vacuum-like plate).
  bool vanishes() const noexcept;

  /// When both coefficients are constants (ideal, Drude or Schwinger at xi = 0).
  bool is_constant() const noexcept { return kind_ == Kind::constant; }
  ReflectionPair constant_pair() const noexcept { return {fixed_tm_, fixed_te_}; }

private:
  enum class Kind { constant, fresnel, plasma_zero, impedance_zero, impedance };

  Kind kind_ = Kind::constant;
  double fixed_tm_ = 1.0;
  double fixed_te_ = 1.0;
  double eps_minus_1_ = 0.0;  // fresnel
  double t_ = 0.0;            // fresnel, impedance
  double w_ = 0.0;            // 2 z omega_p / c for the zero-frequency forms
  double impedance_ = 0.0;    // Z(i xi)
};

}  // namespace casimir
