#pragma once

#include <vector>

#include "casimir/constants.hpp"
#include "casimir/materials.hpp"
#include "casimir/reflection.hpp"

namespace casimir {

/// Two parallel semispaces separated by a vacuum gap z.
struct PlateConfig {
  MaterialModel material_1;
  MaterialModel material_2;
  double z = 0.0;  // m
  Prescription zero_freq = Prescription::schwinger_ideal;

  /// Throws DomainError / ConfigurationError.
  void validate() const;

  static PlateConfig symmetric(const MaterialModel& m, double z);
  static PlateConfig symmetric(const MaterialModel& m, double z, Prescription p);
};

struct ThermalState {
  double T = 300.0;  // K
  Tolerances tolerances{};
  long max_terms = 5'000'000;

  void validate() const;
};

/// Matsubara-summed quantity. per_l holds every term actually summed (l = 0 weighted 1/2).
struct MatsubaraResult {
  double value = 0.0;
  std::vector<double> per_l;
  double truncation_estimate = 0.0;  // geometric tail added to value
  double error_estimate = 0.0;       // quadrature error bound plus |truncation_estimate|
  long l_max = 0;
};

using FreeEnergyResult = MatsubaraResult;

/// Free energy per unit area (J/m^2):
///   F = (k_B T / 8 pi z^2) sum'_l int_{t_l}^inf y sum_alpha ln(1 - r1 r2 e^-y) dy,
/// y = 2 q z, t_l = 2 xi_l z / c. Requires T > 0.
FreeEnergyResult free_energy(const PlateConfig& cfg, const ThermalState& ts);

/// Pressure (Pa), negative for attraction:
///   P = -(k_B T / 8 pi z^3) sum'_l int_{t_l}^inf y^2 sum_alpha r1 r2 e^-y/(1 - r1 r2 e^-y) dy.
/// T = 0 is evaluated through the continuous-frequency integral.
double pressure(const PlateConfig& cfg, const ThermalState& ts);
MatsubaraResult pressure_terms(const PlateConfig& cfg, const ThermalState& ts);

/// T = 0 free energy per unit area, (hbar c / 32 pi^2 z^3) int_0^inf dt int_t^inf (...) dy.
double zero_temperature_free_energy(const PlateConfig& cfg, const Tolerances& tol = {});
double zero_temperature_pressure(const PlateConfig& cfg, const Tolerances& tol = {});

/// Interaction entropy -dF/dT in J/(K m^2), by Richardson-extrapolated central
/// differences at steps 4%, 2% and 1% of T. Throws NumericError when the two
/// extrapolants disagree beyond rel_deriv plus the free-energy noise floor.
double entropy(const PlateConfig& cfg, double T, const Tolerances& tol = {});

/// l = 0 term of the pressure (Pa). Closed forms for unit/zero coefficients:
/// -k_B T zeta(3) / (4 pi z^3) for Schwinger, half of it for Drude.
double classical_term(const PlateConfig& cfg, const ThermalState& ts);

}  // namespace casimir
