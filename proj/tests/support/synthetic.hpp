#pragma once

#include <cmath>
#include <memory>
#include <vector>

#include "casimir/materials.hpp"

namespace casimir::testing {

/// Im eps of the Drude model, omega_p^2 gamma / (omega (omega^2 + gamma^2)), sampled on
/// n log-spaced frequencies in [w_min, w_max].
inline std::shared_ptr<const OpticalTable> drude_table(double omega_p, double gamma, double w_min,
                                                       double w_max, int n) {
  std::vector<double> w(n), im(n);
  for (int i = 0; i < n; ++i) {
    w[i] = w_min * std::pow(w_max / w_min, static_cast<double>(i) / (n - 1));
    im[i] = omega_p * omega_p * gamma / (w[i] * (w[i] * w[i] + gamma * gamma));
  }
  return std::make_shared<const OpticalTable>(std::move(w), std::move(im));
}

}  // namespace casimir::testing
