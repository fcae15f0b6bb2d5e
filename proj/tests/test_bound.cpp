#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hotspots/bound.hpp"
#include "hotspots/constants.hpp"
#include "hotspots/errors.hpp"
#include "oracles.hpp"

using namespace hotspots;
using namespace hotspots::bound;

TEST_CASE("evaluate: published alpha slices") {
  const auto c2 = constants::dimension_constants(2);
  const auto c3 = constants::dimension_constants(3);
  const auto c4 = constants::dimension_constants(4);
  CHECK(std::abs(evaluate(2, c2.alpha_d, c2.sw_coeff, 0.258).constant - 58.35) < 0.3);
  CHECK(std::abs(evaluate(3, c3.alpha_d, c3.sw_coeff, 0.194).constant - 22.03) < 0.15);
  CHECK(std::abs(evaluate(4, c4.alpha_d, c4.sw_coeff, 0.17).constant - 14.71) < 0.15);

  // Rounded inputs as printed.
  CHECK(std::abs(evaluate(2, 0.58614, 10.6499, 0.258).constant - 58.35) < 0.3);
  CHECK(std::abs(evaluate(3, 0.4390, 11.2596, 0.194).constant - 22.03) < 0.15);
  CHECK(std::abs(evaluate(4, 0.3602, 11.74, 0.17).constant - 14.71) < 0.15);
}

TEST_CASE("evaluate: field identities") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(2, 40);
  std::uniform_real_distribution<double> beta(0.01, 0.95), M(1.0, 20.0), stretch(1.001, 4.0);
  for (int k = 0; k < 200; ++k) {
    const int d = dim(rng);
    const double b = beta(rng), m = M(rng);
    const double alpha = feasible_from(b) * stretch(rng);
    const BoundEvaluation e = evaluate(d, b, m, alpha);
    CAPTURE(d);
    CAPTURE(b);
    CAPTURE(alpha);
    REQUIRE(e.feasible);
    CHECK(e.survival_bound > 0.0);
    CHECK(e.growth > 1.0);
    CHECK(e.constant >= 1.0);
    CHECK(e.ratio_lower_bound == doctest::Approx(1.0 / e.constant).epsilon(1e-14));
    CHECK(std::abs(e.survival_bound + (e.growth - e.survival_bound) * e.ratio_lower_bound - 1.0) <= 1e-12);
    CHECK(e.survival_bound + (e.growth - e.survival_bound) == doctest::Approx(e.growth).epsilon(1e-15));
    CHECK(e.constant == doctest::Approx(oracle::bound_constant(d, b, m, alpha)).epsilon(1e-12));
  }
}

TEST_CASE("evaluate: infeasible alphas are flagged, not thrown") {
  const double ff = feasible_from(0.5);
  const BoundEvaluation below = evaluate(2, 0.5, 10.0, 0.5 * ff);
  CHECK_FALSE(below.feasible);
  CHECK(std::isinf(below.constant));
  CHECK(below.ratio_lower_bound == 0.0);
  CHECK_FALSE(evaluate(2, 0.5, 10.0, ff).feasible);
  CHECK(evaluate(2, 0.5, 10.0, ff * 1.01).feasible);

  CHECK_THROWS_AS(evaluate(2, 0.5, 10.0, 0.0), DomainError);
  CHECK_THROWS_AS(evaluate(2, 1.0, 10.0, 1.0), DomainError);
  CHECK_THROWS_AS(evaluate(2, 0.5, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(evaluate(1, 0.5, 10.0, 1.0), DomainError);
}

TEST_CASE("evaluate: blow-up at both ends of the feasible region") {
  const double ff = feasible_from(0.4);
  double previous = 0.0;
  for (const double gap : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const double c = evaluate(3, 0.4, 11.0, ff * (1.0 + gap)).constant;
    CHECK(c > previous);
    previous = c;
  }
  CHECK(previous > 1e6);
  CHECK(evaluate(3, 0.4, 11.0, 20.0).constant > 1e90);
  CHECK(evaluate(3, 0.4, 11.0, 20.0).constant ==
        doctest::Approx(evaluate(3, 0.4, 11.0, 20.0).growth).epsilon(1e-3));
}

TEST_CASE("optimize: d = 2 against the grid-scan oracle") {
  const auto c2 = constants::dimension_constants(2);
  const BoundResult r = optimize(2, 0.58614, 10.6499);
  const double ff = feasible_from(0.58614);
  const oracle::ScanMinimum scan = oracle::grid_scan(2, 0.58614, 10.6499, ff, 2.0, 1e-4, 1e-7);
  CHECK(std::abs(r.constant_star - 58.3) < 0.2);
  CHECK(std::abs(r.alpha_star - 0.257) < 0.01);
  CHECK(r.constant_star == doctest::Approx(scan.value).epsilon(1e-9));
  CHECK(r.alpha_star > r.feasible_from);
  CHECK(r.feasible_from == doctest::Approx(1.0 / (4.0 * std::numbers::pi * (1.0 - 0.58614))));
  CHECK(r.evaluations > 1024);

  const BoundResult exact = hot_spots_constant(2);
  CHECK(exact.beta == c2.alpha_d);
  CHECK(exact.M == c2.sw_coeff);
  // 50-digit grid-scan reference for the exact-root constants.
  CHECK(exact.constant_star == doctest::Approx(58.35498084649599).epsilon(1e-9));
}

TEST_CASE("optimize: agrees with a dense scan on random triples") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(2, 30);
  std::uniform_real_distribution<double> beta(0.05, 0.95), M(3.0, 20.0);
  for (int k = 0; k < 20; ++k) {
    const int d = dim(rng);
    const double b = beta(rng), m = M(rng);
    CAPTURE(d);
    CAPTURE(b);
    CAPTURE(m);
    const BoundResult r = optimize(d, b, m);
    const double ff = feasible_from(b);
    const oracle::ScanMinimum scan = oracle::grid_scan(d, b, m, ff, ff + 10.0, 1e-3, 1e-5);
    CHECK(std::abs(r.constant_star - scan.value) <= 1e-6 * scan.value);
    CHECK(r.constant_star <= scan.value * (1.0 + 1e-12));
    CHECK(r.alpha_star > r.feasible_from);
    // Never above any probed value.
    for (double a = ff * 1.01; a < ff + 10.0; a *= 1.37) CHECK(r.constant_star <= oracle::bound_constant(d, b, m, a));
  }
}

TEST_CASE("optimize: input validation") {
  CHECK_THROWS_AS(optimize(2, 0.0, 10.0), DomainError);
  CHECK_THROWS_AS(optimize(2, 1.0, 10.0), DomainError);
  CHECK_THROWS_AS(optimize(2, 0.5, 0.0), DomainError);
  CHECK_THROWS_AS(optimize(1, 0.5, 10.0), DomainError);
}

TEST_CASE("hot_spots_constant: theorem-level ceilings") {
  CHECK(hot_spots_constant(2).constant_star <= 60.0);
  CHECK(hot_spots_constant(3).constant_star <= 23.0);
  CHECK(hot_spots_constant(4).constant_star <= 15.0);
  CHECK(std::ceil(hot_spots_constant(3).constant_star) == 23.0);
  CHECK(std::ceil(hot_spots_constant(4).constant_star) == 15.0);
}

TEST_CASE("hot_spots_constant: non-increasing in d") {
  double previous = INFINITY;
  for (int d = 2; d <= 20; ++d) {
    CAPTURE(d);
    const double c = hot_spots_constant(d).constant_star;
    CHECK(c <= previous);
    previous = c;
  }
  const double c200 = hot_spots_constant(200).constant_star;
  CHECK(c200 > 3.5);
  CHECK(c200 < 6.0);
  CHECK(c200 > asymptotic_limit());
}

TEST_CASE("general_constant") {
  const BoundResult same = general_constant(2, constants::dimension_constants(2).alpha_d,
                                            constants::dimension_constants(2).sw_coeff);
  CHECK(same.constant_star == hot_spots_constant(2).constant_star);
  CHECK(same.alpha_star == hot_spots_constant(2).alpha_star);

  const BoundResult smaller = general_constant(2, 0.3, 10.6499);
  CHECK(smaller.constant_star < hot_spots_constant(2).constant_star);
  const double ff = feasible_from(0.3);
  CHECK(smaller.constant_star ==
        doctest::Approx(oracle::grid_scan(2, 0.3, 10.6499, ff, ff + 10.0, 1e-3, 1e-6).value).epsilon(1e-8));

  const BoundResult near_one = general_constant(2, 0.99, 10.6499);
  CHECK(std::isfinite(near_one.constant_star));
  CHECK(near_one.constant_star > 1e30);
  CHECK(near_one.feasible_from == doctest::Approx(1.0 / (4.0 * std::numbers::pi * 0.01)));
  const double ff99 = feasible_from(0.99);
  CHECK(near_one.constant_star ==
        doctest::Approx(oracle::grid_scan(2, 0.99, 10.6499, ff99, ff99 + 10.0, 1e-3, 1e-6).value).epsilon(1e-8));

  CHECK_THROWS_AS(general_constant(2, 1.0, 10.0), DomainError);
  CHECK_THROWS_AS(general_constant(2, 1.5, 10.0), DomainError);
}

TEST_CASE("asymptotic_limit") {
  CHECK(asymptotic_limit() == doctest::Approx(std::exp(std::numbers::e / 2.0)).epsilon(1e-15));
  CHECK(asymptotic_limit() == doctest::Approx(3.8928475749095628).epsilon(1e-15));
  CHECK(std::exp(constants::sw_dimensionless_limit() / (4.0 * std::numbers::pi)) ==
        doctest::Approx(asymptotic_limit()).epsilon(1e-15));
}
