#include "casimir/constants.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "casimir/error.hpp"

namespace casimir {

void Tolerances::validate() const {
  auto check = [](double v, const char* name) {
    if (!(v > 0.0 && v <= 1e-2)) {
      throw ValidationError(std::string("tolerance ") + name + " must lie in (0, 1e-2], got " +
                            std::to_string(v));
    }
  };
  check(rel_quad, "rel_quad");
  check(rel_sum_tail, "rel_sum_tail");
  check(rel_deriv, "rel_deriv");
}

double matsubara_frequency(double temperature, long l) {
  if (!(temperature >= 0.0)) throw DomainError("matsubara_frequency: temperature must be >= 0");
  if (l < 0) throw DomainError("matsubara_frequency: index must be >= 0");
  if (l == 0 || temperature == 0.0) return 0.0;
  // xi_1 computed once so that xi_l = l * xi_1 holds exactly.
  const double xi1 = 2.0 * PhysicalConstants::pi * PhysicalConstants::k_B * temperature /
                     PhysicalConstants::hbar;
  return static_cast<double>(l) * xi1;
}

double boson_mass_kg(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("boson_mass_kg: range must be > 0");
  return PhysicalConstants::hbar / (lambda * PhysicalConstants::c);
}

std::uint64_t constants_hash() {
  constexpr double values[] = {PhysicalConstants::hbar, PhysicalConstants::c,
                               PhysicalConstants::k_B,  PhysicalConstants::G,
                               PhysicalConstants::zeta3, PhysicalConstants::e_charge};
  std::uint64_t h = 1469598103934665603ULL;
  for (double v : values) {
    auto bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

}  // namespace casimir
