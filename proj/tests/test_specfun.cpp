#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hotspots/errors.hpp"
#include "hotspots/specfun.hpp"

using namespace hotspots;
using namespace hotspots::specfun;

namespace {

// Reference values below come from an independent 50-digit evaluation
// (mpmath besselj / besseljzero / loggamma, bisection for the Neumann root).

// J_{1/2}(x) = sqrt(2/(pi x)) sin x.
double half_order_closed_form(double x) { return std::sqrt(2.0 / (std::numbers::pi * x)) * std::sin(x); }

}  // namespace

TEST_CASE("log_gamma: closed forms and reference values") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-15);
  CHECK(std::abs(log_gamma(2.0)) < 1e-15);
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-13));
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-13));

  const struct {
    double x, value;
  } refs[] = {{3.7, 1.4280723266653881292},
              {10.0, 12.801827480081469611},
              {100.5, 361.43554046777762156},
              {251.0, 1134.0452317908529606},
              {499.5, 2602.0092968128980469}};
  for (const auto& r : refs) CHECK(log_gamma(r.x) == doctest::Approx(r.value).epsilon(1e-13));
}

TEST_CASE("log_gamma: rejects nonpositive and non-finite arguments") {
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
  CHECK_THROWS_AS(log_gamma(std::nan("")), DomainError);
  CHECK_THROWS_AS(log_gamma(INFINITY), DomainError);
}

TEST_CASE("BesselOrder: rejects negative and non-finite orders") {
  CHECK_THROWS_AS(BesselOrder{-0.5}, DomainError);
  CHECK_THROWS_AS(BesselOrder{std::nan("")}, DomainError);
  CHECK_THROWS_AS(BesselOrder{INFINITY}, DomainError);
  CHECK(BesselOrder(0.0).value() == 0.0);
}

TEST_CASE("bessel_j: small cases") {
  CHECK(bessel_j(BesselOrder(0), 0.0) == 1.0);
  CHECK(bessel_j(BesselOrder(1.5), 0.0) == 0.0);
  CHECK(std::abs(bessel_j(BesselOrder(0), 2.404826)) < 1e-6);
  CHECK(std::abs(bessel_j(BesselOrder(0.5), std::numbers::pi)) < 1e-12);
}

TEST_CASE("bessel_j: absolute accuracy against high-precision references") {
  const struct {
    double nu, x, value;
  } refs[] = {
      {0, 1, 0.76519768655796655145},       {0, 10, -0.2459357644513483352},
      {0, 20, 0.16702466434058315473},      {1, 3, 0.33905895852593645893},
      {2.5, 3.7, 0.45685188411295336234},   {30, 35, 0.1047154953284924155},
      {30, 80, 0.092327030078832060012},    {99, 105, 0.11513612212225295231},
      {250, 255, 0.1066734545651003004},    {250, 520, 0.030038248832985660769},
      {0.5, 7.3, 0.25114271474902147417},
  };
  for (const auto& r : refs) {
    CAPTURE(r.nu);
    CAPTURE(r.x);
    CHECK(std::abs(bessel_j(BesselOrder(r.nu), r.x) - r.value) <= 1e-13);
  }
}

TEST_CASE("bessel_j: half order matches the closed form on (0, 10]") {
  const BesselOrder half(0.5);
  for (int k = 1; k <= 100; ++k) {
    const double x = 0.1 * k;
    CAPTURE(x);
    CHECK(std::abs(bessel_j(half, x) - half_order_closed_form(x)) <= 1e-12);
  }
}

TEST_CASE("bessel_j: range errors") {
  CHECK_THROWS_AS(bessel_j(BesselOrder(0), -0.1), RangeError);
  CHECK_THROWS_AS(bessel_j(BesselOrder(0), 20.5), RangeError);
  CHECK_NOTHROW(bessel_j(BesselOrder(0), 20.0));
  CHECK_THROWS_AS(bessel_j(BesselOrder(3), std::nan("")), RangeError);
}

TEST_CASE("first_bessel_zero: reference roots") {
  const RootResult j0 = first_bessel_zero(BesselOrder(0));
  CHECK(j0.value == doctest::Approx(2.4048255576957728).epsilon(1e-14));
  CHECK(std::abs(j0.value - 2.404826) < 1e-6);

  CHECK(std::abs(first_bessel_zero(BesselOrder(0.5)).value - std::numbers::pi) < 1e-9);
  CHECK(std::abs(first_bessel_zero(BesselOrder(1)).value - 3.8317059702075123) < 1e-9);
  CHECK(std::abs(first_bessel_zero(BesselOrder(99)).value - 107.80810329718983) < 1e-9);
}

TEST_CASE("first_bessel_zero: result invariants") {
  for (const double nu : {0.0, 0.5, 1.0, 2.5, 7.0, 29.0}) {
    CAPTURE(nu);
    const RootResult r = first_bessel_zero(BesselOrder(nu));
    CHECK(r.bracket_lo < r.value);
    CHECK(r.value < r.bracket_hi);
    CHECK(std::abs(r.residual) <= 1e-12);
    CHECK(r.iterations > 0);
    if (nu > 0.0) CHECK(r.value >= std::sqrt(nu * (nu + 2.0)));
  }
}

TEST_CASE("neumann_ball_root: reference roots") {
  CHECK(std::abs(neumann_ball_root(2).value - 1.841184) < 1e-6);
  CHECK(std::abs(neumann_ball_root(3).value - 2.0816) < 5e-4);
  CHECK(std::abs(neumann_ball_root(4).value - 2.299) < 5e-3);

  CHECK(neumann_ball_root(2).value == doctest::Approx(1.8411837813406593).epsilon(1e-13));
  CHECK(neumann_ball_root(3).value == doctest::Approx(2.0815759778181006).epsilon(1e-13));
  CHECK(neumann_ball_root(4).value == doctest::Approx(2.2999103302284109).epsilon(1e-13));
  CHECK(neumann_ball_root(200).value == doctest::Approx(14.177795987538353).epsilon(1e-13));
}

TEST_CASE("neumann_ball_root: rejects d < 2") {
  CHECK_THROWS_AS(neumann_ball_root(1), DomainError);
  CHECK_THROWS_AS(neumann_ball_root(-3), DomainError);
}

TEST_CASE("root families: bracket and ordering properties for d = 2..60") {
  for (int d = 2; d <= 60; ++d) {
    CAPTURE(d);
    const RootResult p = neumann_ball_root(d);
    const double p_sq = p.value * p.value;
    CHECK(p_sq > d + 8.0 / (d + 6.0));
    CHECK(p_sq < d + 2.0);
    CHECK(std::abs(p.residual) <= 1e-12);
    CHECK(p.bracket_lo < p.value);
    CHECK(p.value < p.bracket_hi);

    const double nu = 0.5 * d - 1.0;
    const RootResult j = first_bessel_zero(BesselOrder(nu));
    if (nu > 0.0) {
      CHECK(j.value >= std::sqrt(nu * (nu + 2.0)));
      CHECK(std::sqrt(nu * (nu + 2.0)) >= 0.5 * d - 2.0 / d);
    }
    CHECK(p.value < j.value);
  }
}
