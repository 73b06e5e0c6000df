#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "deltashell/oracle.hpp"

using namespace deltashell;

namespace {
constexpr double kZeroEnergyCoupling = 1.4105211740589948;
}

TEST_CASE("well profile bookkeeping and validation") {
  const WellProfile w = make_well(1.0, 1.0, 0.1);
  CHECK(w.depth == doctest::Approx(10.0));
  CHECK(w.coupling() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(w.r_inner() == doctest::Approx(0.95));
  CHECK_THROWS_AS(make_well(0.0, 1.0, 0.1), DomainError);
  CHECK_THROWS_AS(make_well(1.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(make_well(0.05, 1.0, 0.2), DomainError);  // well crosses r = 0
  CHECK_THROWS_AS(integrate_well(make_well(1.0, 1.0, 0.1), 1.5, -1), DomainError);
}

TEST_CASE("zero depth: the interior form continues freely") {
  for (double eps : {-0.5, 0.0, 0.3}) {
    for (int kappa : {-1, -2, 1}) {
      const WellProfile w = make_well(1.0, 0.0, 0.05);
      const double got = integrate_radial(w, eps, kappa);
      const double expect =
          free_inner_ratio_at(eps, w.r_outer(), channel_from_kappa(kappa));
      REQUIRE(got == doctest::Approx(expect).epsilon(1e-8));
    }
  }
}

TEST_CASE("narrow well reproduces the delta matching ratio") {
  const WellProfile w = make_well(1.0, kZeroEnergyCoupling, 1e-3);
  const double ratio = integrate_radial(w, 0.0, -1);
  // exterior ratio at (eps = 0, rho = 1) is -2, up to O(width)
  CHECK(ratio == doctest::Approx(-2.0).epsilon(1e-2));
}

TEST_CASE("accumulated rotation converges to minus the coupling angle") {
  const double A = kZeroEnergyCoupling;
  double prev_err = 1e300;
  for (double w : {2e-2, 1e-2, 5e-3, 2.5e-3}) {
    const WellIntegration res = integrate_well(make_well(1.0, A, w), 0.0, -1);
    const double err = std::abs(res.rotation + A);
    CHECK(err < prev_err);
    CHECK(err < 5.0 * w);
    prev_err = err;
  }
}

TEST_CASE("norm change across the well vanishes in the sharp limit") {
  double prev = 1e300;
  for (double w : {1e-1, 1e-2, 1e-3}) {
    const WellIntegration res = integrate_well(make_well(1.0, 1.0, w), 0.2, -1);
    const double gain = std::abs(res.log_norm_gain);
    CHECK(gain < prev);
    prev = gain;
  }
  CHECK(prev < 1e-2);
}

TEST_CASE("well ground state approaches the delta result") {
  const auto eps = well_bound_state(make_well(1.0, kZeroEnergyCoupling, 1e-2), -1);
  REQUIRE(eps.has_value());
  CHECK(std::abs(*eps) < 2e-2);  // O(width) with a constant near one
}

TEST_CASE("below threshold the well binds nothing") {
  CHECK_FALSE(well_bound_state(make_well(1.0, 0.2, 0.05), -1).has_value());
  CHECK_FALSE(well_bound_state(make_well(1.0, 0.2, 0.01), -1).has_value());
}

TEST_CASE("convergence study: errors shrink monotonically") {
  const auto rows = convergence_study(1.0, 1.0, {0.1, 0.05, 0.025});
  REQUIRE(rows.size() == 3);
  for (size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(rows[i].epsilon_well.has_value());
    REQUIRE(rows[i].epsilon_delta.has_value());
    if (i > 0) REQUIRE(rows[i].abs_error < rows[i - 1].abs_error);
  }
}

TEST_CASE("convergence study with zero coupling is all unbound") {
  for (const auto& row : convergence_study(1.0, 0.0, {0.1, 0.05})) {
    CHECK_FALSE(row.epsilon_well.has_value());
    CHECK_FALSE(row.epsilon_delta.has_value());
    CHECK(std::isnan(row.abs_error));
  }
}

TEST_CASE("deep coupling near the Dirac sea still converges") {
  const auto rows = convergence_study(1.0, 2.0, {0.05, 0.025});
  REQUIRE(rows[0].epsilon_delta.has_value());
  CHECK(*rows[0].epsilon_delta < -0.5);
  for (const auto& row : rows) {
    REQUIRE(row.epsilon_well.has_value());
    // 5 w (1 + depth * w) with depth * w = A = 2
    CHECK(row.abs_error < 5.0 * row.width * 3.0);
  }
}
