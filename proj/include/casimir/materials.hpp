#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "casimir/grid.hpp"

namespace casimir {

/// Imaginary part of eps(omega) sampled on a strictly increasing positive frequency
/// grid. Passivity (Im eps >= 0) is enforced; at least 8 rows are required.
class OpticalTable {
public:
  static constexpr std::size_t kMinRows = 8;

  /// Throws ValidationError naming every offending row (1-based).
  OpticalTable(std::vector<double> omega, std::vector<double> im_eps);

  std::span<const double> omega() const noexcept { return omega_; }
  std::span<const double> im_eps() const noexcept { return im_eps_; }
  std::size_t size() const noexcept { return omega_.size(); }

  /// Log-log interpolation between samples; linear when an endpoint is zero.
  double interpolate(double omega) const;

  OpticalTable scaled(double factor) const;

  /// True when every Im eps sample is zero.
  bool lossless() const noexcept;

private:
  std::vector<double> omega_;
  std::vector<double> im_eps_;
};

/// Analytic model of Im eps below the first tabulated frequency.
struct LowFrequencyExtension {
  enum class Kind { none, drude, plasma };
  Kind kind = Kind::none;
  double omega_p = 0.0;  // rad/s
  double gamma = 0.0;    // rad/s, drude only

  static LowFrequencyExtension none() { return {}; }
  static LowFrequencyExtension drude(double omega_p, double gamma);
  static LowFrequencyExtension plasma(double omega_p);
};

enum class MaterialKind { ideal_metal, plasma, drude, impedance, tabulated };

std::string to_string(MaterialKind kind);

/// Dielectric or surface-impedance description of a plate material.
class MaterialModel {
public:
  /// Ideal metal.
  MaterialModel() = default;

  static MaterialModel ideal_metal();
  static MaterialModel plasma(double omega_p);
  static MaterialModel drude(double omega_p, double gamma);
  static MaterialModel impedance(double omega_p);
  static MaterialModel tabulated(std::shared_ptr<const OpticalTable> table,
                                 LowFrequencyExtension extension);
  /// Empty half-space (eps = 1), represented as a lossless table.
  static MaterialModel vacuum();

  MaterialKind kind() const noexcept { return kind_; }
  bool has_plasma_frequency() const noexcept;
  /// Plasma frequency of the model, or of the table's low-frequency extension.
  double omega_p() const;
  double gamma() const noexcept { return gamma_; }
  const OpticalTable& table() const;
  const LowFrequencyExtension& extension() const noexcept { return extension_; }

  /// eps = 1 at every frequency: a lossless table without low-frequency extension.
  bool is_vacuum() const noexcept;

  /// Human-readable parameters, also echoed in output metadata.
  std::string describe() const;

private:

  MaterialKind kind_ = MaterialKind::ideal_metal;
  double omega_p_ = 0.0;
  double gamma_ = 0.0;
  std::shared_ptr<const OpticalTable> table_;
  LowFrequencyExtension extension_;
};

namespace presets {
/// Gold with omega_p = 9.0 eV, gamma = 0.035 eV. Configuration defaults, not fitted data.
inline constexpr double kGoldPlasmaEv = 9.0;
inline constexpr double kGoldGammaEv = 0.035;
MaterialModel gold_plasma();
MaterialModel gold_drude();
MaterialModel gold_impedance();
}  // namespace presets

/// eps(i xi) for xi > 0. Throws DomainError for xi <= 0 and UnsupportedOperation for
/// ideal-metal and impedance models, which carry no permittivity.
double eps_imag_axis(const MaterialModel& m, double xi);

/// eps(i xi) - 1, computed without forming eps first.
double eps_minus_one(const MaterialModel& m, double xi);

/// Kramers-Kronig transform of a loss table to the imaginary axis:
///   eps(i xi) - 1 = (2/pi) int_0^inf omega Im eps(omega) / (omega^2 + xi^2) d omega,
/// split into the analytic extension below the table, the interpolated table, and an
/// omega^-3 tail above the last row.
double kk_eps_minus_one(const OpticalTable& table, const LowFrequencyExtension& extension,
                        double xi, double rel_tol = 1e-11);

std::vector<std::pair<double, double>> kk_transform(const OpticalTable& table, const Grid& xi_grid,
                                                    const LowFrequencyExtension& extension);

/// Leontovich impedance in the infrared-optics regime, Z(i xi) = xi / sqrt(xi^2 + omega_p^2).
double impedance_imag_axis(const MaterialModel& m, double xi);

/// Soft validity bound for the impedance boundary condition.
inline constexpr double kImpedanceValidityBound = 0.3;

}  // namespace casimir
