#include <doctest.h>

#include <cmath>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/materials.hpp"
#include "synthetic.hpp"

using namespace casimir;

namespace {
constexpr double kWp = 1.37e16;
constexpr double kGamma = 5.3e13;

double drude_eps(double wp, double g, double xi) { return 1.0 + wp * wp / (xi * (xi + g)); }
}  // namespace

TEST_CASE("analytic permittivities on the imaginary axis") {
  const double X = 3.0e15;
  CHECK(eps_imag_axis(MaterialModel::plasma(X), X) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(eps_imag_axis(MaterialModel::drude(X, X), X) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK_THROWS_AS(eps_imag_axis(MaterialModel::plasma(X), 0.0), DomainError);
  CHECK_THROWS_AS(eps_imag_axis(MaterialModel::plasma(X), -1.0), DomainError);
  CHECK_THROWS_AS(eps_imag_axis(MaterialModel::ideal_metal(), X), UnsupportedOperation);
  CHECK_THROWS_AS(eps_imag_axis(MaterialModel::impedance(X), X), UnsupportedOperation);
}

TEST_CASE("model parameter validation") {
  CHECK_THROWS(MaterialModel::plasma(0.0));
  CHECK_THROWS(MaterialModel::plasma(-1.0));
  CHECK_THROWS(MaterialModel::drude(1e16, -1.0));
  CHECK_NOTHROW(MaterialModel::drude(1e16, 0.0));
  CHECK_THROWS_AS(MaterialModel::ideal_metal().omega_p(), ConfigurationError);
  CHECK(MaterialModel::ideal_metal().kind() == MaterialKind::ideal_metal);
  CHECK(MaterialModel().kind() == MaterialKind::ideal_metal);
}

TEST_CASE("gold presets") {
  const auto g = presets::gold_drude();
  CHECK(g.omega_p() == doctest::Approx(ev_to_rad_per_s(9.0)));
  CHECK(g.gamma() == doctest::Approx(ev_to_rad_per_s(0.035)));
  CHECK(presets::gold_plasma().kind() == MaterialKind::plasma);
  CHECK(presets::gold_impedance().kind() == MaterialKind::impedance);
  CHECK(g.describe().find("drude") != std::string::npos);
}

TEST_CASE("monotonicity, ordering and high-frequency limit") {
  for (const auto& m : {MaterialModel::plasma(kWp), MaterialModel::drude(kWp, kGamma)}) {
    double prev = INFINITY;
    for (int i = 0; i <= 80; ++i) {
      const double xi = kWp * std::pow(10.0, -4.0 + 0.1 * i);
      const double e = eps_imag_axis(m, xi);
      CHECK(e > 1.0);
      CHECK(e < prev);
      prev = e;
    }
    CHECK(eps_imag_axis(m, 1e3 * kWp) - 1.0 < 1e-5);
  }
  for (int i = 0; i <= 40; ++i) {
    const double xi = kWp * std::pow(10.0, -4.0 + 0.1 * i);
    CHECK(eps_imag_axis(MaterialModel::drude(kWp, kGamma), xi) <
          eps_imag_axis(MaterialModel::plasma(kWp), xi));
  }
}

TEST_CASE("optical table validation names offending rows") {
  std::vector<double> w{1, 2, 3, 3, 5, 6, 7, 8};
  std::vector<double> im{1, 1, 1, 1, -0.5, 1, 1, 1};
  try {
    OpticalTable t(w, im);
    FAIL("accepted an invalid table");
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("row 4") != std::string::npos);
    CHECK(msg.find("row 5") != std::string::npos);
    CHECK(msg.find("row 2") == std::string::npos);
  }
  CHECK_THROWS_AS(OpticalTable({1, 2, 3}, {0, 0, 0}), ValidationError);
  CHECK_THROWS_AS(OpticalTable({0, 2, 3, 4, 5, 6, 7, 8}, {0, 0, 0, 0, 0, 0, 0, 0}),
                  ValidationError);
}

TEST_CASE("table interpolation is log-log") {
  std::vector<double> w, im;
  for (int i = 0; i < 8; ++i) {
    w.push_back(std::pow(10.0, i));
    im.push_back(std::pow(10.0, -2.0 * i));
  }
  const OpticalTable t(w, im);
  CHECK(t.interpolate(std::sqrt(10.0)) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(t.interpolate(3e5) == doctest::Approx(1.0 / 9e10).epsilon(1e-12));
}

TEST_CASE("Kramers-Kronig reproduces the Drude model") {
  const auto table = testing::drude_table(kWp, kGamma, 1e11, 1e19, 600);
  const auto ext = LowFrequencyExtension::drude(kWp, kGamma);
  const auto m = MaterialModel::tabulated(table, ext);
  // Reference point and three decades around the plasma frequency.
  CHECK(eps_imag_axis(m, 1e15) == doctest::Approx(drude_eps(kWp, kGamma, 1e15)).epsilon(5e-3));
  for (int i = 0; i <= 40; ++i) {
    const double xi = kWp * std::pow(10.0, -3.0 + 0.1 * i);
    CAPTURE(xi);
    CHECK(eps_imag_axis(m, xi) == doctest::Approx(drude_eps(kWp, kGamma, xi)).epsilon(5e-3));
  }
  const auto grid = make_grid(1e-3 * kWp, 10.0 * kWp, 30, GridScale::logarithmic);
  const auto pairs = kk_transform(*table, grid, ext);
  REQUIRE(pairs.size() == 30);
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    CHECK(pairs[i].second >= 1.0);
    CHECK(pairs[i].second < pairs[i - 1].second);
  }
}

TEST_CASE("Kramers-Kronig is linear and vanishes for a lossless table") {
  const auto table = testing::drude_table(kWp, kGamma, 1e12, 1e18, 200);
  const auto none = LowFrequencyExtension::none();
  const double xi = 0.1 * kWp;
  const double base = kk_eps_minus_one(*table, none, xi);
  const double doubled = kk_eps_minus_one(table->scaled(2.0), none, xi);
  CHECK(doubled == doctest::Approx(2.0 * base).epsilon(1e-12));

  const auto vacuum = MaterialModel::vacuum();
  CHECK(vacuum.is_vacuum());
  CHECK(eps_imag_axis(vacuum, xi) == 1.0);
  CHECK(eps_imag_axis(vacuum, 1e3) == 1.0);
}

TEST_CASE("plasma extension adds the free-carrier pole") {
  const auto table = testing::drude_table(kWp, kGamma, 1e14, 1e18, 200);
  const auto drude_ext = LowFrequencyExtension::drude(kWp, kGamma);
  const auto plasma_ext = LowFrequencyExtension::plasma(kWp);
  const double xi = 1e13;
  // The plasma extension carries the omega_p^2 / xi^2 reactive pole on top of its losses.
  CHECK(kk_eps_minus_one(*table, plasma_ext, xi) > kk_eps_minus_one(*table, drude_ext, xi));
  CHECK(kk_eps_minus_one(*table, plasma_ext, xi) > kWp * kWp / (xi * xi));
}

TEST_CASE("impedance on the imaginary axis") {
  const double X = 2.0e15;
  const auto m = MaterialModel::impedance(X);
  CHECK(impedance_imag_axis(m, 0.0) == 0.0);
  CHECK(impedance_imag_axis(m, X) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  const double z = impedance_imag_axis(MaterialModel::impedance(1.37e16), 1e14);
  CHECK(z == doctest::Approx(7.299e-3).epsilon(1e-3));
  CHECK(z < kImpedanceValidityBound);
  CHECK_THROWS_AS(impedance_imag_axis(MaterialModel::plasma(X), X), UnsupportedOperation);
  CHECK_THROWS_AS(impedance_imag_axis(m, -1.0), DomainError);
}
