#include "yukawa_brute.hpp"

#include <cmath>
#include <vector>

#include "casimir/constants.hpp"

namespace casimir::testing {

namespace {

constexpr int kCellsPerLambda = 15;
constexpr int kExtent = 20;  // in units of lambda, laterally and in depth

// Thickness-weighted density of each depth cell [k d, (k + 1) d).
std::vector<double> cell_densities(const LayeredPlate& plate, double d, int cells) {
  std::vector<double> rho(cells, 0.0);
  for (int k = 0; k < cells; ++k) {
    const double lo = k * d;
    const double hi = lo + d;
    double top = 0.0;
    double acc = 0.0;
    for (const auto& layer : plate.layers()) {
      const double bottom = top + layer.thickness;
      const double overlap = std::fmin(hi, bottom) - std::fmax(lo, top);
      if (overlap > 0.0) acc += layer.density * overlap;
      if (bottom >= hi) break;
      top = bottom;
    }
    rho[k] = acc / d;
  }
  return rho;
}

// int over the plane of e^{-r/l}/r with r = sqrt(x^2 + y^2 + h^2): midpoint cells inside
// the disk of radius R, exact remainder outside. Uses the eight-fold symmetry of the grid.
double lateral(double h, double l, double d, double R) {
  const int n = static_cast<int>(std::lround(R / d));
  double sum = 0.0;
  const double h2 = h * h;
  const double R2 = R * R;
  for (int i = 0; i < n; ++i) {
    const double x = (i + 0.5) * d;
    for (int j = 0; j <= i; ++j) {
      const double y = (j + 0.5) * d;
      const double rho2 = x * x + y * y;
      if (rho2 > R2) break;
      const double r = std::sqrt(rho2 + h2);
      sum += (i == j ? 4.0 : 8.0) * std::exp(-r / l) / r;
    }
  }
  // Cells whose centres lie inside the disk cover it only approximately; the remainder
  // below uses the disk radius itself.
  return sum * d * d + 2.0 * PhysicalConstants::pi * l * std::exp(-std::sqrt(R2 + h2) / l);
}

double energy(const std::vector<double>& rho1, const std::vector<double>& rho2, double z,
              double d, double l, double R) {
  const int n = static_cast<int>(rho1.size());
  std::vector<double> L(2 * n - 1);
  for (int s = 0; s < 2 * n - 1; ++s) L[s] = lateral(z + (s + 1) * d, l, d, R);
  double e = 0.0;
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) e += rho1[k] * rho2[j] * L[k + j];
  }
  return e * d * d;
}

}  // namespace

double brute_force_yukawa_pressure(const LayeredPlate& p1, const LayeredPlate& p2, double z,
                                   const YukawaParams& p) {
  const double l = p.lambda;
  const double d = l / kCellsPerLambda;
  const int cells = kExtent * kCellsPerLambda;
  const double R = kExtent * l;
  const auto rho1 = cell_densities(p1, d, cells);
  const auto rho2 = cell_densities(p2, d, cells);
  const double step = 1e-3 * l;
  const double scale = -PhysicalConstants::G * p.alpha_G;
  const double e_plus = scale * energy(rho1, rho2, z + step, d, l, R);
  const double e_minus = scale * energy(rho1, rho2, z - step, d, l, R);
  return -(e_plus - e_minus) / (2.0 * step);
}

}  // namespace casimir::testing
