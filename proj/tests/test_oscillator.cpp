#include <doctest.h>

#include <cmath>
#include <numbers>

#include "casimir/error.hpp"
#include "casimir/geometry.hpp"
#include "casimir/oscillator.hpp"

using namespace casimir;
using PC = PhysicalConstants;

namespace {
constexpr double kPi = std::numbers::pi;

OscillatorConfig device(double z0, double K = 1e-4) {
  OscillatorConfig o;
  o.K = K;
  o.z0 = z0;
  o.R = 100e-6;
  o.m_eff = 1e-9;
  o.plates = PlateConfig::symmetric(MaterialModel::ideal_metal(), z0);
  o.thermal.T = 0.0;
  return o;
}

OscillatorConfig gold_device(double z0) {
  auto o = device(z0);
  o.plates = PlateConfig::symmetric(presets::gold_plasma(), z0, Prescription::plasma);
  o.thermal.T = 300.0;
  return o;
}

const Grid kDz = make_grid(-200e-9, 900e-9, 221, GridScale::linear);
}  // namespace

TEST_CASE("stiff spring: the Casimir term is negligible") {
  auto o = device(5e-6, 1e3);
  const auto r = oscillator_analysis(o, make_grid(-50e-9, 50e-9, 101, GridScale::linear));
  CHECK_FALSE(r.empty);
  CHECK_FALSE(r.bistable);
  REQUIRE(r.stationary.size() == 1);
  CHECK(r.stationary[0].kind == StationaryKind::minimum);
  CHECK(std::abs(r.stationary[0].dz) <= 1e-9);
  REQUIRE(r.omega_local.has_value());
  CHECK(r.omega_free == doctest::Approx(std::sqrt(1e3 / 1e-9)).epsilon(1e-14));
  CHECK(*r.omega_local == doctest::Approx(r.omega_free).epsilon(1e-6));
}

TEST_CASE("attraction softens the spring") {
  auto on = device(2e-6);
  auto off = on;
  off.casimir = false;
  const auto r_on = oscillator_analysis(on, kDz);
  const auto r_off = oscillator_analysis(off, kDz);
  REQUIRE(r_on.omega_local.has_value());
  REQUIRE(r_off.omega_local.has_value());
  CHECK(*r_off.omega_local == doctest::Approx(r_off.omega_free).epsilon(1e-9));
  CHECK(*r_on.omega_local < *r_off.omega_local);
  CHECK(*r_on.local_min_dz >= 0.0);
}

TEST_CASE("bistability appears as the rest separation shrinks") {
  for (bool gold : {false, true}) {
    CAPTURE(gold);
    bool seen = false;
    double prev_omega = INFINITY;
    for (int z0_nm = 2000; z0_nm >= 1000; z0_nm -= 100) {
      const double z0 = z0_nm * 1e-9;
      const auto r = oscillator_analysis(gold ? gold_device(z0) : device(z0), kDz);
      CAPTURE(z0_nm);
      if (seen) CHECK(r.bistable);
      if (r.bistable) {
        seen = true;
        CHECK(r.stationary.size() >= 3);
        int minima = 0;
        for (const auto& p : r.stationary) minima += p.kind == StationaryKind::minimum;
        CHECK(minima >= 2);
      }
      if (!seen) {
        REQUIRE(r.omega_local.has_value());
        CHECK(*r.omega_local < prev_omega);
        prev_omega = *r.omega_local;
      }
    }
    CHECK(seen);
    CHECK_FALSE(oscillator_analysis(gold ? gold_device(2e-6) : device(2e-6), kDz).bistable);
  }
}

TEST_CASE("stationary points alternate and are sorted") {
  const auto r = oscillator_analysis(device(1e-6), kDz);
  REQUIRE(r.bistable);
  for (std::size_t i = 1; i < r.stationary.size(); ++i) {
    CHECK(r.stationary[i].dz > r.stationary[i - 1].dz);
  }
  CHECK(r.stationary.front().kind == StationaryKind::minimum);
  CHECK(r.stationary[1].kind == StationaryKind::maximum);
  CHECK(r.stationary.back().at_contact);
  CHECK(r.stationary[1].energy > r.stationary.front().energy);
}

TEST_CASE("ideal-metal sphere energy") {
  const auto o = device(1e-6);
  const std::vector<double> s{0.2e-6, 1e-6, 3e-6};
  const auto V = sphere_plate_energy(o, s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double expect = -std::pow(kPi, 3) * PC::hbar_c * o.R / (720.0 * s[i] * s[i]);
    CHECK(V[i] == doctest::Approx(expect).epsilon(1e-12));
    // The separation derivative of V is the proximity-force sphere force.
    const double h = s[i] * 1e-3;
    const auto Vh = sphere_plate_energy(o, {s[i] - h, s[i] + h});
    CHECK(-(Vh[1] - Vh[0]) / (2 * h) ==
          doctest::Approx(ideal_sphere_force(SphereConfig{o.R, s[i]})).epsilon(1e-5));
  }
}

TEST_CASE("sphere energy for a dispersive plate matches direct integration") {
  const auto o = gold_device(1e-6);
  const std::vector<double> s{0.3e-6, 1e-6};
  const auto V = sphere_plate_energy(o, s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    // 2 pi R int_s^inf F(x) dx with x = s e^v, Simpson on v in [0, 7] and an x^-2 tail.
    const int n = 140;
    const double vmax = 7.0;
    const double h = vmax / n;
    std::vector<double> f(n + 1);
    for (int j = 0; j <= n; ++j) {
      auto c = o.plates;
      c.z = s[i] * std::exp(j * h);
      f[j] = free_energy(c, o.thermal).value * c.z;
    }
    double sum = f[0] + f[n];
    for (int j = 1; j < n; ++j) sum += (j % 2 ? 4.0 : 2.0) * f[j];
    double integral = sum * h / 3.0;
    const double x_end = s[i] * std::exp(vmax);
    integral += f[n] / x_end * x_end / 2.0;  // F ~ x^-3 beyond the last node
    const double expect = 2.0 * kPi * o.R * integral;
    CAPTURE(s[i]);
    CHECK(V[i] == doctest::Approx(expect).epsilon(2e-3));
    CHECK(V[i] < 0.0);
  }
}

TEST_CASE("grid requirements") {
  const auto o = device(1e-6);
  CHECK_THROWS_AS(oscillator_analysis(o, make_grid(0.0, 1e-9, 4, GridScale::linear)), ValidationError);
  CHECK_THROWS_AS(oscillator_analysis(o, Grid({0.0, 1e-9, 3e-9, 4e-9, 5e-9}, GridScale::linear)),
                  ValidationError);
  CHECK_THROWS_AS(oscillator_analysis(o, make_grid(0.0, 1e-6, 11, GridScale::linear)), ValidationError);
  auto bad = o;
  bad.K = 0.0;
  CHECK_THROWS_AS(oscillator_analysis(bad, kDz), DomainError);

  // A window that sees only the rising spring has no stationary point.
  auto stiff = device(5e-6, 1e3);
  const auto r = oscillator_analysis(stiff, make_grid(10e-9, 50e-9, 41, GridScale::linear));
  CHECK(r.empty);
  CHECK(r.stationary.empty());
  CHECK_FALSE(r.omega_local.has_value());
}
