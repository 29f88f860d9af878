#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/materials.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/summation.hpp"

namespace casimir {

OpticalTable::OpticalTable(std::vector<double> omega, std::vector<double> im_eps)
    : omega_(std::move(omega)), im_eps_(std::move(im_eps)) {
  if (omega_.size() != im_eps_.size()) {
    throw ValidationError("optical table: frequency and Im eps columns differ in length");
  }
  std::ostringstream bad;
  int n_bad = 0;
  for (std::size_t i = 0; i < omega_.size(); ++i) {
    std::string why;
    if (!(omega_[i] > 0.0) || !std::isfinite(omega_[i])) {
      why = "frequency must be positive and finite";
    } else if (i > 0 && !(omega_[i] > omega_[i - 1])) {
      why = "frequency not strictly increasing";
    } else if (!(im_eps_[i] >= 0.0) || !std::isfinite(im_eps_[i])) {
      why = "Im eps must be finite and >= 0 (passivity)";
    }
    if (!why.empty()) {
      bad << (n_bad++ ? "; " : "") << "row " << (i + 1) << ": " << why;
    }
  }
  if (n_bad > 0) throw ValidationError("optical table invalid: " + bad.str());
  if (omega_.size() < kMinRows) {
    throw ValidationError("optical table needs at least " + std::to_string(kMinRows) +
                          " rows, got " + std::to_string(omega_.size()));
  }
}

double OpticalTable::interpolate(double omega) const {
  if (omega <= omega_.front()) return im_eps_.front();
  if (omega >= omega_.back()) return im_eps_.back();
  const auto it = std::upper_bound(omega_.begin(), omega_.end(), omega);
  const std::size_t hi = static_cast<std::size_t>(it - omega_.begin());
  const std::size_t lo = hi - 1;
  const double f0 = im_eps_[lo];
  const double f1 = im_eps_[hi];
  if (f0 > 0.0 && f1 > 0.0) {
    const double slope = std::log(f1 / f0) / std::log(omega_[hi] / omega_[lo]);
    return f0 * std::exp(slope * std::log(omega / omega_[lo]));
  }
  const double w = (omega - omega_[lo]) / (omega_[hi] - omega_[lo]);
  return f0 + w * (f1 - f0);
}

bool OpticalTable::lossless() const noexcept {
  return std::all_of(im_eps_.begin(), im_eps_.end(), [](double v) { return v == 0.0; });
}

OpticalTable OpticalTable::scaled(double factor) const {
  std::vector<double> im(im_eps_);
  for (double& v : im) v *= factor;
  return OpticalTable(omega_, std::move(im));
}

LowFrequencyExtension LowFrequencyExtension::drude(double omega_p, double gamma) {
  if (!(omega_p > 0.0)) throw ValidationError("drude extension: omega_p must be > 0");
  if (!(gamma >= 0.0)) throw ValidationError("drude extension: gamma must be >= 0");
  return {Kind::drude, omega_p, gamma};
}

LowFrequencyExtension LowFrequencyExtension::plasma(double omega_p) {
  if (!(omega_p > 0.0)) throw ValidationError("plasma extension: omega_p must be > 0");
  return {Kind::plasma, omega_p, 0.0};
}

namespace {

// int_{omega_N}^inf A / (omega^2 (omega^2 + xi^2)) d omega with A = Im eps_N omega_N^3.
double tail_contribution(double omega_n, double im_n, double xi) {
  const double a = im_n * omega_n * omega_n * omega_n;
  const double x = xi / omega_n;
  if (x < 1e-2) {
    const double x2 = x * x;
    return a / (omega_n * omega_n * omega_n) *
           (1.0 / 3.0 - x2 * (1.0 / 5.0 - x2 * (1.0 / 7.0 - x2 / 9.0)));
  }
  return a / (xi * xi) * (1.0 / omega_n - std::atan(x) / xi);
}

// int_0^{omega_0} omega Im eps_D(omega) / (omega^2 + xi^2) d omega in u = ln omega.
double drude_extension_contribution(double omega_0, double omega_p, double gamma, double xi,
                                    double rel_tol) {
  if (gamma == 0.0) return 0.0;
  const double u0 = std::log(omega_0);
  std::vector<double> bp{u0 - 60.0};
  for (double s : {std::log(gamma), std::log(xi)}) {
    if (s > bp.front() && s < u0) bp.push_back(s);
  }
  std::sort(bp.begin() + 1, bp.end());
  bp.push_back(u0);
  auto f = [&](std::span<const double> u, std::span<double> out) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double w = std::exp(u[i]);
      out[i] = w * omega_p * omega_p * gamma / ((w * w + gamma * gamma) * (w * w + xi * xi));
    }
  };
  // every node is positive, so a relative target is meaningful
  return quad::integrate(f, std::span<const double>(bp), rel_tol).value;
}

}  // namespace

double kk_eps_minus_one(const OpticalTable& table, const LowFrequencyExtension& extension,
                        double xi, double rel_tol) {
  if (!(xi > 0.0)) throw DomainError("kk transform: xi must be > 0");
  const auto omega = table.omega();
  const auto im = table.im_eps();

  CompensatedSum total;
  if (extension.kind == LowFrequencyExtension::Kind::drude) {
    total.add(drude_extension_contribution(omega.front(), extension.omega_p, extension.gamma, xi,
                                           rel_tol));
  }

  std::vector<double> bp(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) bp[i] = std::log(omega[i]);
  auto f = [&](std::span<const double> u, std::span<double> out) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double w = std::exp(u[i]);
      out[i] = w * w * table.interpolate(w) / (w * w + xi * xi);
    }
  };
  const auto body = quad::integrate(f, std::span<const double>(bp), rel_tol, 0.0, 200000);
  total.add(body.value);
  total.add(tail_contribution(omega.back(), im.back(), xi));

  double result = (2.0 / PhysicalConstants::pi) * total.value();
  if (extension.kind == LowFrequencyExtension::Kind::plasma) {
    // lossless free-electron pole below the table
    result += extension.omega_p * extension.omega_p / (xi * xi);
  }
  return result;
}

std::vector<std::pair<double, double>> kk_transform(const OpticalTable& table, const Grid& xi_grid,
                                                    const LowFrequencyExtension& extension) {
  std::vector<std::pair<double, double>> out;
  out.reserve(xi_grid.size());
  for (double xi : xi_grid.points()) {
    out.emplace_back(xi, 1.0 + kk_eps_minus_one(table, extension, xi));
  }
  return out;
}

}  // namespace casimir
