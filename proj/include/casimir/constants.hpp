#pragma once

#include <cstdint>

namespace casimir {

/// CODATA 2018 values, SI units. Fixed at build time so golden outputs are reproducible.
struct PhysicalConstants {
  static constexpr double hbar = 1.054571817e-34;   // J s
  static constexpr double c = 299792458.0;          // m/s
  static constexpr double k_B = 1.380649e-23;       // J/K
  static constexpr double G = 6.67430e-11;          // m^3/(kg s^2)
  static constexpr double zeta3 = 1.2020569031595942853997;  // Riemann zeta(3)
  static constexpr double e_charge = 1.602176634e-19;        // J per eV
  static constexpr double hbar_c = hbar * c;                 // J m
  static constexpr double pi = 3.14159265358979323846264338328;
};

/// Relative tolerances shared by the engine. Each must lie in (0, 1e-2].
struct Tolerances {
  double rel_quad = 1e-9;
  double rel_sum_tail = 1e-10;
  double rel_deriv = 1e-6;

  void validate() const;
};

/// Matsubara frequency 2 pi k_B T l / hbar in rad/s.
double matsubara_frequency(double temperature, long l);

/// Photon energy in eV to angular frequency in rad/s.
constexpr double ev_to_rad_per_s(double energy_ev) {
  return energy_ev * PhysicalConstants::e_charge / PhysicalConstants::hbar;
}
constexpr double rad_per_s_to_ev(double omega) {
  return omega * PhysicalConstants::hbar / PhysicalConstants::e_charge;
}

/// Mass in kg of a boson whose exchange has range lambda: m = hbar / (lambda c).
double boson_mass_kg(double lambda);

/// FNV-1a over the bit patterns of every stored constant; echoed in output metadata.
std::uint64_t constants_hash();

}  // namespace casimir
