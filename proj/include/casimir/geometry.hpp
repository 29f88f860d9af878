#pragma once

#include <vector>

#include "casimir/lifshitz.hpp"

namespace casimir {

/// Sphere of radius R at closest-approach separation z from a plate.
struct SphereConfig {
  double R = 0.0;  // m
  double z = 0.0;  // m

  static constexpr double kWarnRatio = 0.1;
  static constexpr double kMaxRatio = 0.3;

  /// Throws GeometryError when z/R exceeds kMaxRatio, DomainError for non-positive inputs.
  void validate() const;
  /// z/R above kWarnRatio: the proximity-force estimate is outside its usual range.
  bool beyond_pfa_range() const noexcept { return z / R > kWarnRatio; }
  double pfa_error_bound() const noexcept { return z / R; }
};

/// A value carrying a fractional error bound.
struct BoundedValue {
  double value = 0.0;
  double rel_error_bound = 0.0;
};

/// -pi^2 hbar c / (240 z^4).
double ideal_pressure(double z);
/// -pi^2 hbar c / (720 z^3), energy per unit area.
double ideal_free_energy(double z);
/// -pi^3 hbar c R / (360 z^3).
double ideal_sphere_force(const SphereConfig& s);

/// F_sp(z) = 2 pi R F_pp(z) with the plate free energy per area, bound z/R.
/// cfg.z is replaced by s.z.
BoundedValue pfa_sphere_force(const SphereConfig& s, const PlateConfig& cfg,
                              const ThermalState& ts);

/// Plate pressure recovered from the sphere-force gradient, P = -F_sp'(z) / (2 pi R),
/// by a five-point stencil with step z/100. Bound z/R.
BoundedValue pressure_from_gradient(const SphereConfig& s, const PlateConfig& cfg,
                                    const ThermalState& ts);

/// Discrete zero-mean distribution of surface height offsets.
class RoughnessProfile {
public:
  RoughnessProfile(std::vector<double> offsets, std::vector<double> weights);

  /// Offsets +a and -a with weight 1/2 each.
  static RoughnessProfile symmetric(double amplitude);
  static RoughnessProfile flat();

  const std::vector<double>& offsets() const noexcept { return offsets_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  double min_offset() const noexcept;

private:
  std::vector<double> offsets_;
  std::vector<double> weights_;
};

/// sum_i w_i P(z + h_i). Throws ValidationError when z + min(h) <= 0.
double rough_pressure(const PlateConfig& cfg, const ThermalState& ts,
                      const RoughnessProfile& profile);

}  // namespace casimir
