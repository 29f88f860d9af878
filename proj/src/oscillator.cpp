#include "casimir/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "casimir/error.hpp"

namespace casimir {

namespace {
constexpr double kPi = PhysicalConstants::pi;
constexpr int kExtensionDoublings = 6;
constexpr double kDegenerateFraction = 1e-3;

bool ideal_at_zero_temperature(const OscillatorConfig& o) {
  return o.thermal.T == 0.0 && o.plates.material_1.kind() == MaterialKind::ideal_metal &&
         o.plates.material_2.kind() == MaterialKind::ideal_metal;
}

// int_a^b g for g = g_a (s/a)^-p through (a, g_a) and (b, g_b).
double power_segment(double a, double b, double ga, double gb) {
  if (ga == 0.0 || gb == 0.0) return 0.5 * (ga + gb) * (b - a);
  const double lr = std::log(b / a);
  const double p = -std::log(gb / ga) / lr;
  const double e = (1.0 - p) * lr;
  if (std::abs(e) < 1e-8) return ga * a * lr * (1.0 + 0.5 * e);
  return ga * a * std::expm1(e) / (1.0 - p);
}
}  // namespace

const char* to_string(StationaryKind kind) {
  switch (kind) {
    case StationaryKind::minimum: return "minimum";
    case StationaryKind::maximum: return "maximum";
    case StationaryKind::degenerate: return "degenerate";
  }
  return "?";
}

void OscillatorConfig::validate() const {
  if (!(K > 0.0) || !std::isfinite(K)) throw DomainError("oscillator: K must be > 0");
  if (!(m_eff > 0.0) || !std::isfinite(m_eff)) throw DomainError("oscillator: m_eff must be > 0");
  if (!(z0 > 0.0) || !std::isfinite(z0)) throw DomainError("oscillator: z0 must be > 0");
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("oscillator: R must be > 0");
  thermal.validate();
}

std::vector<double> sphere_plate_energy(const OscillatorConfig& o,
                                        const std::vector<double>& separations) {
  std::vector<double> v(separations.size(), 0.0);
  if (!o.casimir || separations.empty()) return v;
  if (ideal_at_zero_temperature(o)) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double s = separations[i];
      v[i] = -kPi * kPi * kPi * PhysicalConstants::hbar_c * o.R / (720.0 * s * s);
    }
    return v;
  }

  std::vector<double> nodes(separations);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  const double far = nodes.back();
  for (int k = 1; k <= kExtensionDoublings; ++k) nodes.push_back(far * std::ldexp(1.0, k));

  std::vector<double> g(nodes.size());
  PlateConfig cfg = o.plates;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    cfg.z = nodes[i];
    g[i] = -free_energy(cfg, o.thermal).value;
  }

  // Cumulative int_{s_i}^inf g, from the far end inward.
  const std::size_t n = nodes.size();
  const double p_tail = -std::log(g[n - 1] / g[n - 2]) / std::log(nodes[n - 1] / nodes[n - 2]);
  if (!(p_tail > 1.0)) {
    throw NumericError("sphere-plate energy: free energy decays too slowly for a finite tail", 0.0,
                       p_tail);
  }
  std::vector<double> tail(n);
  tail[n - 1] = g[n - 1] * nodes[n - 1] / (p_tail - 1.0);
  for (std::size_t i = n - 1; i-- > 0;) {
    tail[i] = tail[i + 1] + power_segment(nodes[i], nodes[i + 1], g[i], g[i + 1]);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto it = std::lower_bound(nodes.begin(), nodes.begin() + (n - kExtensionDoublings),
                                     separations[i]);
    v[i] = -2.0 * kPi * o.R * tail[static_cast<std::size_t>(it - nodes.begin())];
  }
  return v;
}

OscillatorResult oscillator_analysis(const OscillatorConfig& o, const Grid& dz_grid) {
  o.validate();
  const auto pts = dz_grid.points();
  const std::size_t n = pts.size();
  if (n < 5) throw ValidationError("oscillator: displacement grid needs at least 5 points");
  const double h = (pts.back() - pts.front()) / static_cast<double>(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(pts[i] - pts[i - 1] - h) > 1e-6 * h) {
      throw ValidationError("oscillator: displacement grid must be uniform");
    }
  }
  if (!(o.z0 - pts.back() > 0.0)) {
    throw ValidationError("oscillator: displacement grid reaches the plate (z0 - dz <= 0)");
  }

  OscillatorResult r;
  r.dz.assign(pts.begin(), pts.end());
  r.separation.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.separation[i] = o.z0 - pts[i];
  const auto v = sphere_plate_energy(o, r.separation);
  r.energy.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.energy[i] = 0.5 * o.K * pts[i] * pts[i] + v[i];
  r.omega_free = std::sqrt(o.K / o.m_eff);

  const auto& u = r.energy;
  auto three_point = [&](std::size_t i) { return (u[i - 1] - 2.0 * u[i] + u[i + 1]) / (h * h); };
  auto curvature = [&](std::size_t i) {
    if (i < 2 || i + 2 >= n) return three_point(i);
    return (-u[i - 2] + 16.0 * u[i - 1] - 30.0 * u[i] + 16.0 * u[i + 1] - u[i + 2]) /
           (12.0 * h * h);
  };
  auto classify = [&](double c) {
    if (std::abs(c) < kDegenerateFraction * o.K) return StationaryKind::degenerate;
    return c > 0.0 ? StationaryKind::minimum : StationaryKind::maximum;
  };

  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double left = u[i] - u[i - 1];
    const double right = u[i + 1] - u[i];
    const bool is_min = left < 0.0 && right >= 0.0;
    const bool is_max = left > 0.0 && right <= 0.0;
    if (!is_min && !is_max) continue;
    StationaryPoint sp;
    sp.dz = pts[i];
    sp.energy = u[i];
    sp.curvature = curvature(i);
    sp.curvature_check = three_point(i);
    sp.kind = classify(sp.curvature);
    r.stationary.push_back(sp);
  }
  if (u[n - 1] < u[n - 2]) {
    StationaryPoint sp;
    sp.dz = pts[n - 1];
    sp.energy = u[n - 1];
    sp.curvature = sp.curvature_check = (u[n - 1] - 2.0 * u[n - 2] + u[n - 3]) / (h * h);
    sp.kind = StationaryKind::minimum;
    sp.at_contact = true;
    r.stationary.push_back(sp);
  }

  r.empty = r.stationary.empty();
  int minima = 0;
  for (const auto& sp : r.stationary) {
    if (sp.kind != StationaryKind::minimum) continue;
    ++minima;
    if (sp.at_contact) continue;
    if (!r.local_min_dz || std::abs(sp.dz) < std::abs(*r.local_min_dz)) {
      r.local_min_dz = sp.dz;
      r.omega_local = std::sqrt(sp.curvature / o.m_eff);
    }
  }
  r.bistable = minima >= 2;
  return r;
}

}  // namespace casimir
