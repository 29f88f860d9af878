#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "casimir/simd/kernels.hpp"

using namespace casimir::simd;

namespace {

struct FresnelOut {
  std::vector<double> r_tm, r_te, om_tm, om_te;
  explicit FresnelOut(std::size_t n) : r_tm(n), r_te(n), om_tm(n), om_te(n) {}
};

FresnelOut run_fresnel(const KernelTable& k, const std::vector<double>& y, double em1, double t2) {
  FresnelOut o(y.size());
  k.fresnel(y.data(), y.size(), em1, t2, o.r_tm.data(), o.r_te.data(), o.om_tm.data(),
            o.om_te.data());
  return o;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

std::vector<const KernelTable*> vector_variants() {
  std::vector<const KernelTable*> v;
  if (auto* k = avx2_kernels()) v.push_back(k);
  if (auto* k = neon_kernels()) v.push_back(k);
  return v;
}

// y on [t, t + 80] with t sampled over many decades, lengths that exercise remainders.
std::vector<double> sample_y(std::mt19937_64& rng, double t, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> y(n);
  for (auto& v : y) v = t + 80.0 * std::pow(u(rng), 3.0) + 1e-12;
  return y;
}

}  // namespace

TEST_CASE("scalar Fresnel kernel matches the textbook forms") {
  // r_tm = (eps q - k1)/(eps q + k1), r_te = (q - k1)/(q + k1), k1 = sqrt(q^2 + (eps-1) xi^2/c^2),
  // evaluated here in the dimensionless variables y = 2qz, t = 2 xi z / c.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 6.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double em1 = std::pow(10.0, u(rng));
    const double t = std::pow(10.0, u(rng) - 3.0);
    const auto y = sample_y(rng, t, 17);
    const auto o = run_fresnel(scalar_kernels(), y, em1, t * t);
    for (std::size_t i = 0; i < y.size(); ++i) {
      // The direct quotients cancel when (eps - 1) t^2 << y^2, so the comparison allows
      // an absolute slack at the double rounding level of the oracle.
      const long double eps = 1.0L + em1;
      const long double yy = y[i];
      const long double k1 = std::sqrt(yy * yy + static_cast<long double>(em1) * t * t);
      const auto tm = static_cast<double>((eps * yy - k1) / (eps * yy + k1));
      const auto te = static_cast<double>((k1 - yy) / (k1 + yy));
      auto close = [](double got, double want) {
        return std::abs(got - want) <= 1e-10 * std::abs(want) + 1e-15;
      };
      CHECK(close(o.r_tm[i], tm));
      CHECK(close(o.r_te[i], te));
      CHECK(close(o.om_tm[i], 1.0 - tm));
      CHECK(close(o.om_te[i], 1.0 - te));
    }
  }
}

TEST_CASE("scalar Lifshitz kernel matches direct formulas") {
  const std::vector<double> y{1e-6, 0.3, 1.0, 5.0, 40.0, 300.0};
  const std::vector<double> rr{0.9, 0.5, 1.0, 0.999999, 0.2, 1.0};
  std::vector<double> om(rr.size());
  for (std::size_t i = 0; i < rr.size(); ++i) om[i] = 1.0 - rr[i];
  std::vector<double> f(y.size()), p(y.size());
  scalar_kernels().lifshitz(y.data(), rr.data(), om.data(), y.size(), Quantity::free_energy,
                            f.data());
  scalar_kernels().lifshitz(y.data(), rr.data(), om.data(), y.size(), Quantity::pressure,
                            p.data());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double x = rr[i] * std::exp(-y[i]);
    CHECK(f[i] == doctest::Approx(y[i] * std::log(1.0 - x)).epsilon(1e-9));
    CHECK(p[i] == doctest::Approx(y[i] * y[i] * x / (1.0 - x)).epsilon(1e-9));
  }
}

TEST_CASE("the dispatcher picks a variant the CPU can run") {
  const auto& k = active_kernels();
  CHECK((k.name == "scalar" || k.name == "avx2" || k.name == "neon"));
  if (avx2_kernels()) CHECK(k.name == "avx2");
}

TEST_CASE("vector Fresnel kernels are bitwise identical to scalar") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-4.0, 8.0);
  for (const KernelTable* k : vector_variants()) {
    CAPTURE(k->name);
    for (int trial = 0; trial < 500; ++trial) {
      const double em1 = trial % 50 == 0 ? 0.0 : std::pow(10.0, u(rng));
      const double t = std::pow(10.0, u(rng) - 4.0);
      const auto y = sample_y(rng, t, 1 + static_cast<std::size_t>(trial % 23));
      const auto a = run_fresnel(scalar_kernels(), y, em1, t * t);
      const auto b = run_fresnel(*k, y, em1, t * t);
      for (std::size_t i = 0; i < y.size(); ++i) {
        REQUIRE(same_bits(a.r_tm[i], b.r_tm[i]));
        REQUIRE(same_bits(a.r_te[i], b.r_te[i]));
        REQUIRE(same_bits(a.om_tm[i], b.om_tm[i]));
        REQUIRE(same_bits(a.om_te[i], b.om_te[i]));
      }
    }
  }
}

TEST_CASE("vector Lifshitz kernels agree with scalar to a few ulp") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const KernelTable* k : vector_variants()) {
    CAPTURE(k->name);
    double worst = 0.0;
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial % 31);
      std::vector<double> y(n), rr(n), om(n), a(n), b(n);
      for (std::size_t i = 0; i < n; ++i) {
        y[i] = std::pow(10.0, -8.0 + 10.8 * u(rng));  // 1e-8 .. ~630
        switch (trial % 4) {
          case 0: om[i] = std::pow(10.0, -14.0 * u(rng)); break;  // near-ideal
          case 1: om[i] = u(rng); break;
          case 2: om[i] = 0.0; break;
          default: om[i] = 1.0 - 1e-3 * u(rng); break;  // weak reflector
        }
        rr[i] = 1.0 - om[i];
      }
      for (auto q : {Quantity::free_energy, Quantity::pressure}) {
        scalar_kernels().lifshitz(y.data(), rr.data(), om.data(), n, q, a.data());
        k->lifshitz(y.data(), rr.data(), om.data(), n, q, b.data());
        for (std::size_t i = 0; i < n; ++i) {
          const double diff = std::abs(a[i] - b[i]);
          CHECK(diff <= 1e-14 * std::abs(a[i]) + 1e-300);
          if (a[i] != 0.0) worst = std::max(worst, diff / std::abs(a[i]));
        }
      }
    }
    MESSAGE("worst relative deviation ", worst);
  }
}

TEST_CASE("kernels handle empty and underflowing input") {
  const std::vector<double> y{800.0, 1000.0};
  const std::vector<double> rr{1.0, 0.5};
  const std::vector<double> om{0.0, 0.5};
  std::vector<double> out(2, -1.0);
  active_kernels().lifshitz(y.data(), rr.data(), om.data(), 2, Quantity::pressure, out.data());
  CHECK(out[0] == 0.0);
  CHECK(out[1] == 0.0);
  active_kernels().lifshitz(y.data(), rr.data(), om.data(), 0, Quantity::pressure, out.data());
}
