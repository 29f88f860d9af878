#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "casimir/summation.hpp"

// Globally adaptive 15-point Gauss-Kronrod quadrature. The integrand is called on
// whole panels: f(std::span<const double> x, std::span<double> out) with x.size() == 15,
// which lets the caller run its inner loops over batches of nodes.

namespace casimir::quad {

inline constexpr std::size_t kNodes = 15;

struct Result {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  bool converged = true;
};

namespace detail {

// Kronrod abscissae (positive half, descending) and weights; Gauss weights for the
// embedded 7-point rule at odd Kronrod indices.
inline constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
};

template <class BatchFn>
Panel gk15(BatchFn& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, kNodes> x{};
  std::array<double, kNodes> fx{};
  for (std::size_t j = 0; j < 7; ++j) {
    x[2 * j] = center - half * xgk[j];
    x[2 * j + 1] = center + half * xgk[j];
  }
  x[14] = center;
  f(std::span<const double>(x), std::span<double>(fx));

  const double fc = fx[14];
  double res_k = wgk[7] * fc;
  double res_g = wg[3] * fc;
  double res_abs = std::abs(res_k);
  for (std::size_t j = 0; j < 7; ++j) {
    const double pair = fx[2 * j] + fx[2 * j + 1];
    res_k += wgk[j] * pair;
    res_abs += wgk[j] * (std::abs(fx[2 * j]) + std::abs(fx[2 * j + 1]));
    if (j % 2 == 1) res_g += wg[j / 2] * pair;
  }
  const double mean = 0.5 * res_k;
  double res_asc = wgk[7] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 7; ++j) {
    res_asc += wgk[j] * (std::abs(fx[2 * j] - mean) + std::abs(fx[2 * j + 1] - mean));
  }
  const double scale = std::abs(half);
  res_abs *= scale;
  res_asc *= scale;
  double err = std::abs((res_k - res_g) * half);
  if (res_asc != 0.0 && err != 0.0) {
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * res_abs, err);
  }
  return {a, b, res_k * half, err};
}

}  // namespace detail

/// Integrate over [bp.front(), bp.back()] starting from the panels given by the
/// breakpoints, bisecting the panel with the largest error estimate until
/// error <= max(abs_tol, rel_tol * |value|). Refinement order is deterministic.
template <class BatchFn>
Result integrate(BatchFn&& f, std::span<const double> breakpoints, double rel_tol,
                 double abs_tol = 0.0, int max_panels = 4000) {
  std::vector<detail::Panel> panels;
  panels.reserve(breakpoints.size() + 64);
  Result out;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    panels.push_back(detail::gk15(f, breakpoints[i], breakpoints[i + 1]));
    out.evaluations += static_cast<int>(kNodes);
  }

  auto totals = [&panels]() {
    CompensatedSum value;
    CompensatedSum error;
    for (const auto& p : panels) {
      value.add(p.value);
      error.add(p.error);
    }
    return std::pair{value.value(), error.value()};
  };

  auto [value, error] = totals();
  while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
    if (static_cast<int>(panels.size()) >= max_panels) {
      out.converged = false;
      break;
    }
    auto worst = std::max_element(panels.begin(), panels.end(),
                                  [](const auto& l, const auto& r) { return l.error < r.error; });
    const double a = worst->a;
    const double b = worst->b;
    const double mid = 0.5 * (a + b);
    if (!(mid > a && mid < b)) {
      out.converged = false;
      break;
    }
    *worst = detail::gk15(f, a, mid);
    panels.insert(worst + 1, detail::gk15(f, mid, b));
    out.evaluations += 2 * static_cast<int>(kNodes);
    std::tie(value, error) = totals();
  }
  out.value = value;
  out.error = error;
  return out;
}

/// Convenience overload for a plain interval.
template <class BatchFn>
Result integrate(BatchFn&& f, double a, double b, double rel_tol, double abs_tol = 0.0,
                 int max_panels = 4000) {
  const std::array<double, 2> bp{a, b};
  return integrate(std::forward<BatchFn>(f), std::span<const double>(bp), rel_tol, abs_tol,
                   max_panels);
}

/// Adapts a scalar callable double(double) to the batched interface.
template <class ScalarFn>
auto batched(ScalarFn&& g) {
  return [&g](std::span<const double> x, std::span<double> out) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = g(x[i]);
  };
}

}  // namespace casimir::quad
