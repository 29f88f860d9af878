#include "casimir/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "casimir/error.hpp"
#include "casimir/summation.hpp"

namespace casimir {

namespace {
constexpr double kPi = PhysicalConstants::pi;

void check_separation(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("separation must be > 0");
}

double plate_free_energy(const PlateConfig& cfg, const ThermalState& ts) {
  return free_energy(cfg, ts).value;
}
}  // namespace

void SphereConfig::validate() const {
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("sphere radius must be > 0");
  check_separation(z);
  if (z / R > kMaxRatio) {
    throw GeometryError("z/R = " + std::to_string(z / R) + " exceeds the proximity-force limit " +
                        std::to_string(kMaxRatio));
  }
}

double ideal_pressure(double z) {
  check_separation(z);
  const double z2 = z * z;
  return -kPi * kPi * PhysicalConstants::hbar_c / (240.0 * z2 * z2);
}

double ideal_free_energy(double z) {
  check_separation(z);
  return -kPi * kPi * PhysicalConstants::hbar_c / (720.0 * z * z * z);
}

double ideal_sphere_force(const SphereConfig& s) {
  s.validate();
  return -kPi * kPi * kPi * PhysicalConstants::hbar_c * s.R / (360.0 * s.z * s.z * s.z);
}

BoundedValue pfa_sphere_force(const SphereConfig& s, const PlateConfig& cfg,
                              const ThermalState& ts) {
  s.validate();
  PlateConfig at = cfg;
  at.z = s.z;
  return {2.0 * kPi * s.R * plate_free_energy(at, ts), s.pfa_error_bound()};
}

BoundedValue pressure_from_gradient(const SphereConfig& s, const PlateConfig& cfg,
                                    const ThermalState& ts) {
  s.validate();
  const double h = 0.01 * s.z;
  PlateConfig at = cfg;
  auto f = [&](double z) {
    at.z = z;
    return plate_free_energy(at, ts);
  };
  // F_sp = 2 pi R F_pp, so -F_sp'/(2 pi R) = -F_pp'.
  const double d = (f(s.z - 2.0 * h) - 8.0 * f(s.z - h) + 8.0 * f(s.z + h) - f(s.z + 2.0 * h)) /
                   (12.0 * h);
  return {-d, s.pfa_error_bound()};
}

RoughnessProfile::RoughnessProfile(std::vector<double> offsets, std::vector<double> weights)
    : offsets_(std::move(offsets)), weights_(std::move(weights)) {
  if (offsets_.empty() || offsets_.size() != weights_.size()) {
    throw ValidationError("roughness profile: offsets and weights must be nonempty and equal length");
  }
  CompensatedSum wsum;
  CompensatedSum mean;
  double hmax = 0.0;
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    if (!std::isfinite(offsets_[i]) || !(weights_[i] >= 0.0) || !std::isfinite(weights_[i])) {
      throw ValidationError("roughness profile: entry " + std::to_string(i + 1) +
                            " must have finite offset and weight >= 0");
    }
    wsum.add(weights_[i]);
    mean.add(weights_[i] * offsets_[i]);
    hmax = std::max(hmax, std::abs(offsets_[i]));
  }
  if (std::abs(wsum.value() - 1.0) > 1e-12) {
    throw ValidationError("roughness profile: weights sum to " + std::to_string(wsum.value()) +
                          ", not 1");
  }
  if (std::abs(mean.value()) > 1e-12 * hmax) {
    throw ValidationError("roughness profile: offsets are not zero-mean");
  }
}

RoughnessProfile RoughnessProfile::symmetric(double amplitude) {
  return RoughnessProfile({amplitude, -amplitude}, {0.5, 0.5});
}

RoughnessProfile RoughnessProfile::flat() { return RoughnessProfile({0.0}, {1.0}); }

double RoughnessProfile::min_offset() const noexcept {
  return *std::min_element(offsets_.begin(), offsets_.end());
}

double rough_pressure(const PlateConfig& cfg, const ThermalState& ts,
                      const RoughnessProfile& profile) {
  if (!(cfg.z + profile.min_offset() > 0.0)) {
    throw ValidationError("roughness profile reaches the opposite plate: z + min(offset) <= 0");
  }
  CompensatedSum total;
  PlateConfig at = cfg;
  const auto& h = profile.offsets();
  const auto& w = profile.weights();
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (w[i] == 0.0) continue;
    at.z = cfg.z + h[i];
    total.add(w[i] * pressure(at, ts));
  }
  return total.value();
}

}  // namespace casimir
