#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "casimir/error.hpp"
#include "casimir/lifshitz.hpp"

using namespace casimir;
using PC = PhysicalConstants;

namespace {
constexpr double kPi = std::numbers::pi;

double ideal_energy(double z) { return -kPi * kPi * PC::hbar_c / (720.0 * z * z * z); }
double ideal_pressure0(double z) { return -kPi * kPi * PC::hbar_c / (240.0 * std::pow(z, 4)); }
double classical_ideal(double T, double z) { return -PC::k_B * T * PC::zeta3 / (4.0 * kPi * z * z * z); }

ThermalState at(double T) {
  ThermalState ts;
  ts.T = T;
  return ts;
}

const MaterialModel kIdeal = MaterialModel::ideal_metal();
}  // namespace

TEST_CASE("ideal metal at zero temperature") {
  const auto cfg = PlateConfig::symmetric(kIdeal, 1e-6);
  const double F = zero_temperature_free_energy(cfg);
  const double P = zero_temperature_pressure(cfg);
  CHECK(F == doctest::Approx(ideal_energy(1e-6)).epsilon(1e-9));
  CHECK(P == doctest::Approx(ideal_pressure0(1e-6)).epsilon(1e-9));
  CHECK(P == doctest::Approx(-1.3e-3).epsilon(0.01));
  CHECK(pressure(cfg, at(0.0)) == P);

  const double P_half = zero_temperature_pressure(PlateConfig::symmetric(kIdeal, 0.5e-6));
  CHECK(P_half / P == doctest::Approx(16.0).epsilon(1e-9));
}

TEST_CASE("vacuum on one side gives nothing") {
  PlateConfig cfg{kIdeal, MaterialModel::vacuum(), 1e-6, Prescription::schwinger_ideal};
  CHECK(zero_temperature_free_energy(cfg) == 0.0);
  CHECK(pressure(cfg, at(300.0)) == 0.0);
  CHECK(free_energy(cfg, at(300.0)).value == 0.0);
}

TEST_CASE("plasma gold at 200 nm is bracketed by the ideal metal") {
  const auto cfg = PlateConfig::symmetric(presets::gold_plasma(), 200e-9, Prescription::plasma);
  const double F = free_energy(cfg, at(300.0)).value;
  const double Fi = free_energy(PlateConfig::symmetric(kIdeal, 200e-9), at(300.0)).value;
  CHECK(F < 0.0);
  CHECK(F / Fi > 0.5);
  CHECK(F / Fi < 1.0);
}

TEST_CASE("classical term closed forms") {
  const double z = 6e-6;
  const double expect = classical_ideal(300.0, z);
  CHECK(expect == doctest::Approx(-1.834e-6).epsilon(1e-3));

  const double sch = classical_term(PlateConfig::symmetric(kIdeal, z), at(300.0));
  CHECK(sch == doctest::Approx(expect).epsilon(1e-14));

  const auto drude = MaterialModel::drude(100.0 * PC::c / z, ev_to_rad_per_s(presets::kGoldGammaEv));
  const double d = classical_term(PlateConfig::symmetric(drude, z, Prescription::drude), at(300.0));
  CHECK(d == doctest::Approx(0.5 * expect).epsilon(1e-14));

  const auto stiff = MaterialModel::plasma(1e8 * PC::c / z);
  const double p = classical_term(PlateConfig::symmetric(stiff, z, Prescription::plasma), at(300.0));
  CHECK(std::abs(p / sch - 1.0) < 1e-4);
  CHECK(p / sch < 1.0);
}

TEST_CASE("classical regime at 6 um") {
  const double z = 6e-6;
  const auto terms = pressure_terms(PlateConfig::symmetric(kIdeal, z), at(300.0));
  const double expect = classical_ideal(300.0, z);
  CHECK(terms.value == doctest::Approx(expect).epsilon(0.02));
  const double rest = terms.value - terms.per_l.front();
  CHECK(std::abs(rest) < 0.02 * std::abs(terms.value));
  CHECK(std::abs(terms.truncation_estimate) <= 1e-10 * std::abs(terms.value));

  // Drude plates with a large plasma frequency: half of the ideal classical pressure.
  const auto drude = MaterialModel::drude(1e4 * PC::c / z, ev_to_rad_per_s(presets::kGoldGammaEv));
  const double P = pressure(PlateConfig::symmetric(drude, z, Prescription::drude), at(300.0));
  CHECK(P / expect == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("pressure is the separation derivative of the free energy") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double gamma = ev_to_rad_per_s(presets::kGoldGammaEv);
  for (int i = 0; i < 20; ++i) {
    const double z = 1e-7 * std::pow(30.0, u(rng));
    const double T = 50.0 + 350.0 * u(rng);
    const double wp = ev_to_rad_per_s(3.0 + 10.0 * u(rng));
    PlateConfig cfg;
    switch (i % 4) {
      case 0: cfg = PlateConfig::symmetric(kIdeal, z); break;
      case 1: cfg = PlateConfig::symmetric(MaterialModel::plasma(wp), z, Prescription::plasma); break;
      case 2: cfg = PlateConfig::symmetric(MaterialModel::drude(wp, gamma), z, Prescription::drude); break;
      default:
        cfg = PlateConfig{MaterialModel::plasma(wp), MaterialModel::drude(0.7 * wp, gamma), z,
                          Prescription::plasma};
    }
    const auto ts = at(T);
    const double h = z / 100.0;
    auto F = [&](double zz) {
      auto c = cfg;
      c.z = zz;
      return free_energy(c, ts).value;
    };
    const double dF = (-F(z + 2 * h) + 8 * F(z + h) - 8 * F(z - h) + F(z - 2 * h)) / (12 * h);
    const double P = pressure(cfg, ts);
    CAPTURE(i);
    CAPTURE(z);
    CAPTURE(T);
    CHECK(std::abs(P + dF) / std::abs(P) < 10.0 * ts.tolerances.rel_deriv);
    CHECK(P < 0.0);
  }
}

TEST_CASE("zero-temperature integral matches the 1 K sum") {
  const auto cfg = PlateConfig::symmetric(presets::gold_plasma(), 1e-6, Prescription::plasma);
  const double F0 = zero_temperature_free_energy(cfg);
  const double F1 = free_energy(cfg, at(1.0)).value;
  CHECK(std::abs(F1 / F0 - 1.0) < 1e-3);

  const auto c2 = PlateConfig::symmetric(presets::gold_plasma(), 300e-9, Prescription::plasma);
  CHECK(std::abs(free_energy(c2, at(1.0)).value / zero_temperature_free_energy(c2) - 1.0) < 1e-3);
}

TEST_CASE("plasma frequency sweep approaches the ideal metal") {
  const double z = 1e-6;
  double prev = 0.0;
  for (double f : {1.0, 10.0, 100.0}) {
    const auto cfg = PlateConfig::symmetric(MaterialModel::plasma(f * PC::c / z), z, Prescription::plasma);
    const double F = zero_temperature_free_energy(cfg);
    CHECK(std::abs(F) > std::abs(prev));
    CHECK(std::abs(F) < std::abs(ideal_energy(z)));
    prev = F;
  }
  CHECK(prev / ideal_energy(z) > 0.9);
}

TEST_CASE("monotonicity in separation and plasma frequency") {
  const auto gold = presets::gold_plasma();
  double prev = INFINITY;
  for (double z : {100e-9, 200e-9, 400e-9, 800e-9, 1.6e-6}) {
    const double P = std::abs(pressure(PlateConfig::symmetric(gold, z, Prescription::plasma), at(300.0)));
    CHECK(P < prev);
    prev = P;
  }
  prev = 0.0;
  for (double ev : {2.0, 4.0, 9.0, 20.0}) {
    const auto m = MaterialModel::plasma(ev_to_rad_per_s(ev));
    const double P = std::abs(pressure(PlateConfig::symmetric(m, 500e-9, Prescription::plasma), at(300.0)));
    CHECK(P > prev);
    prev = P;
  }
}

TEST_CASE("Drude and plasma rules differ only at zero frequency") {
  const double z = 1e-6;
  const auto m = presets::gold_drude();
  const auto cd = PlateConfig::symmetric(m, z, Prescription::drude);
  const auto cp = PlateConfig::symmetric(m, z, Prescription::plasma);
  const auto ts = at(300.0);
  const auto td = pressure_terms(cd, ts);
  const auto tp = pressure_terms(cp, ts);
  REQUIRE(td.per_l.size() == tp.per_l.size());
  for (std::size_t l = 1; l < td.per_l.size(); ++l) CHECK(td.per_l[l] == tp.per_l[l]);
  const double gap = td.value - tp.value;
  const double classical_gap = classical_term(cd, ts) - classical_term(cp, ts);
  CHECK(std::abs(gap - classical_gap) <= ts.tolerances.rel_quad * std::abs(tp.value));
  CHECK(gap > 0.0);
}

TEST_CASE("dissimilar plates") {
  const double z = 500e-9;
  const auto a = presets::gold_plasma();
  const auto b = MaterialModel::plasma(ev_to_rad_per_s(4.0));
  const auto ts = at(300.0);
  const double Pab = pressure(PlateConfig{a, b, z, Prescription::plasma}, ts);
  const double Pba = pressure(PlateConfig{b, a, z, Prescription::plasma}, ts);
  const double Paa = pressure(PlateConfig::symmetric(a, z, Prescription::plasma), ts);
  const double Pbb = pressure(PlateConfig::symmetric(b, z, Prescription::plasma), ts);
  CHECK(Pab == doctest::Approx(Pba).epsilon(1e-12));
  CHECK(std::abs(Pab) < std::abs(Paa));
  CHECK(std::abs(Pab) > std::abs(Pbb));
  const double Pmixed = pressure(PlateConfig{kIdeal, a, z, Prescription::plasma}, ts);
  CHECK(std::abs(Pmixed) > std::abs(Paa));
}

TEST_CASE("entropy") {
  const double z = 1e-6;
  const auto plasma = PlateConfig::symmetric(presets::gold_plasma(), z, Prescription::plasma);
  const double S300 = entropy(plasma, 300.0);
  CHECK(std::isfinite(S300));

  SUBCASE("finite-difference definition") {
    const double T = 300.0;
    const double d = 0.01;
    const double F0 = free_energy(plasma, at(T - d)).value;
    const double F1 = free_energy(plasma, at(T + d)).value;
    CHECK((F0 - F1) / (2 * d) == doctest::Approx(S300).epsilon(1e-4));
  }

  SUBCASE("plasma entropy vanishes toward zero temperature") {
    double prev = INFINITY;
    for (double T : {32.0, 16.0, 8.0, 4.0, 2.0, 1.0}) {
      const double S = std::abs(entropy(plasma, T));
      CHECK(S < prev);
      prev = S;
    }
    CHECK(prev < 1e-3 * std::abs(S300));
  }

  SUBCASE("Drude entropy lies below plasma entropy") {
    const auto drude = PlateConfig::symmetric(presets::gold_drude(), z, Prescription::drude);
    for (double T : {1.0, 5.0, 20.0, 50.0}) {
      CAPTURE(T);
      CHECK(entropy(drude, T) < entropy(plasma, T));
    }
  }

  SUBCASE("unreachable quadrature tolerance is a numeric error") {
    Tolerances tol;
    tol.rel_quad = 1e-17;
    CHECK_THROWS_AS(entropy(plasma, 300.0, tol), NumericError);
  }
  CHECK_THROWS_AS(entropy(plasma, 0.0), DomainError);
}

TEST_CASE("configuration checks") {
  CHECK_THROWS_AS(pressure(PlateConfig::symmetric(kIdeal, 0.0), at(300.0)), DomainError);
  CHECK_THROWS_AS(pressure(PlateConfig::symmetric(kIdeal, 1e-6), at(-1.0)), DomainError);
  CHECK(free_energy(PlateConfig::symmetric(kIdeal, 1e-6), at(0.0)).value ==
        doctest::Approx(ideal_energy(1e-6)).epsilon(1e-9));
  ThermalState few = at(1.0);
  few.max_terms = 10;
  CHECK_THROWS_AS(pressure(PlateConfig::symmetric(kIdeal, 1e-6), few), NumericError);
  CHECK_THROWS_AS(
      pressure(PlateConfig::symmetric(presets::gold_plasma(), 1e-6, Prescription::drude), at(300.0)),
      ConfigurationError);
}
