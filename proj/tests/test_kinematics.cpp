#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "deltashell/kinematics.hpp"

using namespace deltashell;

TEST_CASE("channel_from_kappa reproduces the hand-solved channels") {
  const QuantumChannel gs = channel_from_kappa(-1);
  CHECK(gs.j() == 0.5);
  CHECK(gs.l_upper == 0);
  CHECK(gs.l_lower == 1);

  const QuantumChannel flipped = channel_from_kappa(1);
  CHECK(flipped.j() == 0.5);
  CHECK(flipped.l_upper == 1);
  CHECK(flipped.l_lower == 0);

  const QuantumChannel d = channel_from_kappa(-2);
  CHECK(d.j() == 1.5);
  CHECK(d.l_upper == 1);
  CHECK(d.l_lower == 2);
}

TEST_CASE("kappa = 0 is rejected") {
  CHECK_THROWS_AS(channel_from_kappa(0), DomainError);
}

TEST_CASE("both quadratic l(l+1) relations hold in integer arithmetic") {
  for (int kappa = -10; kappa <= 10; ++kappa) {
    if (kappa == 0) continue;
    const QuantumChannel ch = channel_from_kappa(kappa);
    // Multiply l(l+1) = j(j+1) +- kappa + 1/4 through by 4, with 2j = 2|k|-1.
    const int twoj = 2 * std::abs(kappa) - 1;
    CHECK(4 * ch.l_upper * (ch.l_upper + 1) == twoj * (twoj + 2) + 4 * kappa + 1);
    CHECK(4 * ch.l_lower * (ch.l_lower + 1) == twoj * (twoj + 2) - 4 * kappa + 1);
    CHECK(std::abs(ch.l_upper - ch.l_lower) == 1);
  }
}

TEST_CASE("dimensionless point at the reference values") {
  const DimensionlessPoint p = dimensionless_point(0.0, 1.0);
  CHECK(p.s0 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.u0 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.q == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.g0 == doctest::Approx(0.7615941559557649).epsilon(1e-14));

  const DimensionlessPoint p2 = dimensionless_point(0.0, 2.0);
  CHECK(p2.s0 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p2.u0 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p2.q == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("domain errors carry the right codes") {
  CHECK_THROWS_AS(dimensionless_point(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(dimensionless_point(-1.0, 1.0), DomainError);
  try {
    dimensionless_point(2.0, 1.0);
    FAIL("no throw");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::SpectralRange);
  }
  try {
    dimensionless_point(0.0, 0.0);
    FAIL("no throw");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::DegenerateShell);
  }
}

TEST_CASE("q * u0 = s0 to machine precision over random points") {
  std::mt19937_64 rng(20240817);
  std::uniform_real_distribution<double> eps_dist(-1.0 + 1e-9, 1.0 - 1e-9);
  std::uniform_real_distribution<double> rho_dist(1e-6, 20.0);
  for (int i = 0; i < 1000000; ++i) {
    const DimensionlessPoint p = dimensionless_point(eps_dist(rng), rho_dist(rng));
    REQUIRE(std::abs(p.q * p.u0 - p.s0) <= 1e-14 * p.s0);
    REQUIRE(p.s0 > 0.0);
    REQUIRE(p.u0 > 0.0);
    REQUIRE(p.g0 > 0.0);
    REQUIRE(p.g0 < 1.0);
  }
}

TEST_CASE("g0 series and direct evaluation agree at the switchover") {
  const double s = 1e-2;
  const double series = 1.0 - s * s / 3.0 + 2.0 * std::pow(s, 4) / 15.0;
  const double direct = std::tanh(s) / s;
  CHECK(std::abs(series - direct) <= 1e-13);
  CHECK(std::abs(g0_from_s0(std::nextafter(s, 0.0)) -
                 g0_from_s0(std::nextafter(s, 1.0))) <= 1e-13);
}

TEST_CASE("g0 -> 1 as epsilon -> +-1") {
  for (double sign : {-1.0, 1.0}) {
    double prev = 1.0;
    for (int k = 2; k <= 6; ++k) {
      const double eps = sign * (1.0 - std::pow(10.0, -k));
      const double gap = 1.0 - dimensionless_point(eps, 1.0).g0;
      CHECK(gap > 0.0);
      CHECK(gap < prev);
      prev = gap;
    }
    CHECK(prev < 1e-6);
  }
}

TEST_CASE("(1 - g0)/u0 -> 2 rho / 3 as epsilon -> -1") {
  const double rho = 1.0;
  double prev_err = 1.0;
  for (int k = 2; k <= 6; ++k) {
    const DimensionlessPoint p = dimensionless_point(-1.0 + std::pow(10.0, -k), rho);
    const double err = std::abs((1.0 - p.g0) / p.u0 - 2.0 * rho / 3.0);
    CHECK(err < prev_err);
    // error scales with 1 + epsilon = 10^{-k}
    CHECK(err < 10.0 * std::pow(10.0, -k));
    prev_err = err;
  }
}

TEST_CASE("shell coupling tangent") {
  CHECK(ShellCoupling{0.0}.alpha() == 0.0);
  CHECK(ShellCoupling{1.0}.alpha() == doctest::Approx(std::tan(1.0)));
}
