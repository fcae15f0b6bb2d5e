#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "hotspots/brownian.hpp"
#include "hotspots/errors.hpp"
#include "hotspots/heat.hpp"

using namespace hotspots;
using namespace hotspots::mc;

namespace {

WalkConfig config(std::size_t n, double t, double dt, unsigned threads = 1) {
  WalkConfig c;
  c.n_paths = n;
  c.t = t;
  c.dt = dt;
  c.threads = threads;
  return c;
}

double decay_oracle(double a, double x0, double t) {
  const double k = std::numbers::pi / a;
  return std::exp(-k * k * t) * std::cos(k * x0);
}

}  // namespace

TEST_CASE("counter rng: streams are distinct and reproducible") {
  CounterRng a(1, 0), b(1, 0), c(1, 1), d(2, 0);
  std::set<std::uint64_t> seen;
  for (int k = 0; k < 1000; ++k) {
    const auto x = a();
    CHECK(x == b());
    seen.insert(x);
    seen.insert(c());
    seen.insert(d());
  }
  CHECK(seen.size() == 3000);
}

TEST_CASE("fold maps the line onto [0, a]") {
  CHECK(fold(0.3, 1.0) == doctest::Approx(0.3));
  CHECK(fold(-0.3, 1.0) == doctest::Approx(0.3));
  CHECK(fold(1.3, 1.0) == doctest::Approx(0.7));
  CHECK(fold(2.3, 1.0) == doctest::Approx(0.3));
  CHECK(fold(-5.75, 2.0) == doctest::Approx(1.75));
  for (double x = -10.0; x <= 10.0; x += 0.137) {
    const double y = fold(x, 1.5);
    CHECK(y >= 0.0);
    CHECK(y <= 1.5);
  }
}

TEST_CASE("walk config validation") {
  CHECK_NOTHROW(validate(config(10, 0.1, 0.1)));
  CHECK_THROWS_AS(validate(config(10, 0.1, 0.2)), DomainError);
  CHECK_THROWS_AS(validate(config(10, 0.0, 0.1)), DomainError);
  CHECK_THROWS_AS(validate(config(0, 0.1, 0.01)), DomainError);
  CHECK_THROWS_AS(validate(config(10, 0.1, 0.01, 0)), DomainError);
  CHECK(reportable(config(1000, 0.16, 0.01)));
  CHECK_FALSE(reportable(config(999, 0.16, 0.01)));
  CHECK_FALSE(reportable(config(1000, 0.1, 0.01)));
}

TEST_CASE("reflected expectation: eigen decay on the rectangle") {
  for (const double t : {0.05, 0.1, 0.2}) {
    CAPTURE(t);
    const McEstimate e = reflected_expectation_rectangle(2.0, 1.0, {0.5, 0.5}, config(40000, t, t / 16));
    CHECK(e.n_effective == 40000);
    CHECK(std::abs(e.mean - decay_oracle(2.0, 0.5, t)) <= 3.0 * e.std_error);
  }
  CHECK(decay_oracle(2.0, 0.5, 0.1) == doctest::Approx(0.552493).epsilon(1e-5));
}

TEST_CASE("reflected expectation: small t and the maximum") {
  const McEstimate e = reflected_expectation_rectangle(2.0, 1.0, {0.5, 0.5}, config(20000, 1e-6, 1e-6));
  CHECK(std::abs(e.mean - std::cos(std::numbers::pi / 4)) <= 3.0 * e.std_error + 1e-12);
  const McEstimate top = reflected_expectation_rectangle(2.0, 1.0, {1e-9, 0.5}, config(20000, 0.1, 0.01));
  CHECK(top.mean <= 1.0);
  CHECK_THROWS_AS(reflected_expectation_rectangle(2.0, 1.0, {0.0, 0.5}, config(10, 0.1, 0.01)), DomainError);
  CHECK_THROWS_AS(reflected_expectation_rectangle(2.0, 1.0, {0.5, 1.5}, config(10, 0.1, 0.01)), DomainError);
}

TEST_CASE("folding preserves the uniform stationary law") {
  const double a = 2.0;
  const std::size_t n = 100000;
  const auto pts = reflected_endpoints_rectangle(a, 1.0, {0.3, 0.5}, config(n, 5 * a * a, 5 * a * a / 16));
  std::vector<double> bins(20, 0.0);
  for (const Point& p : pts) bins[std::min<std::size_t>(19, static_cast<std::size_t>(p.x / a * 20))] += 1.0;
  const double expected = static_cast<double>(n) / 20;
  double chi2 = 0.0;
  for (const double b : bins) chi2 += (b - expected) * (b - expected) / expected;
  // 0.1% critical value for 19 degrees of freedom.
  CHECK(chi2 < 43.82);
}

TEST_CASE("absorbed survival agrees with the PDE solver") {
  const pde::GridDomain square = pde::make_domain(pde::Rectangle{1, 1}, 1.0 / 32);
  const pde::GridDomain disk = pde::make_domain(pde::Disk{1}, 1.0 / 32);
  for (const pde::GridDomain* d : {&square, &disk}) {
    const pde::Cell x0 = d->central_cell();
    const std::vector<double> ts{0.02, 0.05, 0.1};
    const auto mc = absorbed_survival_horizons(*d, x0, config(20000, 0.1, 2e-5), ts);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      CAPTURE(d->name());
      CAPTURE(ts[k]);
      const double pde_value = pde::heat_survival(*d, x0, ts[k]).survival;
      CHECK(std::abs(mc[k].mean - pde_value) <= std::max(3.0 * mc[k].std_error, 0.02 * pde_value));
    }
  }
}

TEST_CASE("absorbed survival: single step and nested horizons") {
  const pde::GridDomain square = pde::make_domain(pde::Rectangle{1, 1}, 1.0 / 32);
  const pde::Cell c = square.central_cell();
  CHECK(absorbed_survival(square, c, config(5000, 1e-5, 1e-5)).mean >= 0.99);

  const std::vector<double> ts{0.01, 0.03, 0.06, 0.1};
  const auto nested = absorbed_survival_horizons(square, c, config(5000, 0.1, 1e-4), ts);
  for (std::size_t k = 1; k < nested.size(); ++k) CHECK(nested[k].mean <= nested[k - 1].mean);

  const std::vector<double> unordered{0.1, 0.05};
  CHECK_THROWS_AS(absorbed_survival_horizons(square, c, config(10, 0.1, 1e-3), unordered), DomainError);
  CHECK_THROWS_AS(absorbed_survival(square, {-1, 0}, config(10, 0.1, 1e-3)), DomainError);
}

TEST_CASE("estimates are bit-identical across thread counts") {
  const pde::GridDomain disk = pde::make_domain(pde::Disk{1}, 1.0 / 32);
  for (const unsigned threads : {2u, 3u, 4u, 7u}) {
    CAPTURE(threads);
    const McEstimate a = absorbed_survival(disk, disk.central_cell(), config(3001, 0.05, 1e-3, 1));
    const McEstimate b = absorbed_survival(disk, disk.central_cell(), config(3001, 0.05, 1e-3, threads));
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    const McEstimate ra = reflected_expectation_rectangle(2, 1, {0.5, 0.5}, config(3001, 0.1, 0.01, 1));
    const McEstimate rb = reflected_expectation_rectangle(2, 1, {0.5, 0.5}, config(3001, 0.1, 0.01, threads));
    CHECK(ra.mean == rb.mean);
  }
  WalkConfig reseeded = config(3001, 0.1, 0.01);
  reseeded.seed = 99;
  CHECK(reflected_expectation_rectangle(2, 1, {0.5, 0.5}, reseeded).mean !=
        reflected_expectation_rectangle(2, 1, {0.5, 0.5}, config(3001, 0.1, 0.01)).mean);
}

TEST_CASE("standard error is the sample deviation over root n") {
  const pde::GridDomain square = pde::make_domain(pde::Rectangle{1, 1}, 1.0 / 32);
  const McEstimate e = absorbed_survival(square, square.central_cell(), config(4000, 0.05, 1e-3));
  const double p = e.mean;
  const double n = 4000.0;
  CHECK(e.std_error == doctest::Approx(std::sqrt(p * (1 - p) * n / (n - 1)) / std::sqrt(n)).epsilon(1e-12));
}

TEST_CASE("lemma1_mc") {
  const pde::GridDomain rect = pde::make_domain(pde::Rectangle{2, 1}, 1.0 / 32);
  const pde::HotSpotsReport rep = pde::hot_spots_report(rect);
  const McLemma1Report r = lemma1_mc(rect, rep, 0.1, config(10000, 0.1, 1e-4));
  CHECK(r.passed);
  CHECK(r.tolerance == doctest::Approx(3 * r.std_error * std::exp(rep.mu1 * 0.1) + 5e-3));
  const auto pde_probe = pde::lemma1_check(rect, rep, std::vector<double>{0.1}).front();
  CHECK(std::abs(r.probe.slack - pde_probe.slack) <= r.tolerance);

  const McLemma1Report tiny = lemma1_mc(rect, rep, 1e-6, config(2000, 1e-6, 1e-6));
  CHECK(tiny.probe.survival == doctest::Approx(1.0));
  CHECK(tiny.probe.rhs >= 1.0);

  const pde::GridDomain disk = pde::make_domain(pde::Disk{1}, 1.0 / 32);
  CHECK(lemma1_mc(disk, 0.1, config(10000, 0.1, 1e-4)).passed);
}
