#pragma once

#include <optional>
#include <vector>

#include "casimir/grid.hpp"
#include "casimir/lifshitz.hpp"

namespace casimir {

/// Sphere on a spring of stiffness K above a plate. A displacement dz moves the sphere
/// toward the plate, so the separation is z0 - dz.
struct OscillatorConfig {
  double K = 0.0;      // N/m
  double z0 = 0.0;     // m
  double R = 0.0;      // m
  double m_eff = 0.0;  // kg
  PlateConfig plates;
  ThermalState thermal;
  bool casimir = true;  // false: bare spring

  void validate() const;
};

enum class StationaryKind { minimum, maximum, degenerate };

const char* to_string(StationaryKind kind);

struct StationaryPoint {
  double dz = 0.0;               // m
  double energy = 0.0;           // J
  double curvature = 0.0;        // U'' in N/m, five-point stencil where it fits
  double curvature_check = 0.0;  // three-point value at the same node
  StationaryKind kind = StationaryKind::minimum;
  bool at_contact = false;  // U still falling at the largest dz of the grid
};

struct OscillatorResult {
  std::vector<double> dz;          // m
  std::vector<double> separation;  // m
  std::vector<double> energy;      // J
  std::vector<StationaryPoint> stationary;  // ascending dz
  bool bistable = false;  // two or more minima
  bool empty = true;      // no stationary point on the grid
  double omega_free = 0.0;  // sqrt(K / m_eff)
  /// Interior minimum closest to dz = 0 and its small-oscillation frequency.
  std::optional<double> local_min_dz;
  std::optional<double> omega_local;
};

/// Sphere-plate interaction energy V(s) = 2 pi R int_s^inf F_pp(s') ds' at each separation
/// (J). Closed form -pi^3 hbar c R / (720 s^2) for ideal metals at T = 0; otherwise a
/// log-log interpolant of F_pp with a power-law tail.
std::vector<double> sphere_plate_energy(const OscillatorConfig& o,
                                        const std::vector<double>& separations);

/// U(dz) = K dz^2 / 2 + V(z0 - dz) on a uniform displacement grid. The largest dz is
/// treated as the contact point: a U still descending there counts as a minimum.
OscillatorResult oscillator_analysis(const OscillatorConfig& o, const Grid& dz_grid);

}  // namespace casimir
