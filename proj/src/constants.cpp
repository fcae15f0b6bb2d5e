#include "hotspots/constants.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hotspots/errors.hpp"
#include "hotspots/specfun.hpp"

namespace hotspots::constants {

namespace {

namespace bmc = boost::math::constants;

void check_dimension(int d, int max_d) {
  if (d < kMinDimension || d > max_d) {
    throw DomainError("dimension " + std::to_string(d) + " outside [2, " + std::to_string(max_d) + "]");
  }
}

double log_ball_volume(int d) {
  return 0.5 * d * std::log(bmc::pi<double>()) - specfun::log_gamma(0.5 * d + 1.0);
}

}  // namespace

double ball_volume(int d) {
  check_dimension(d, kMaxDimension);
  return std::exp(log_ball_volume(d));
}

DimensionConstants dimension_constants(int d) {
  check_dimension(d, kMaxDimension);
  const specfun::RootResult p = specfun::neumann_ball_root(d);
  const specfun::RootResult j = specfun::first_bessel_zero(specfun::BesselOrder(0.5 * d - 1.0));

  DimensionConstants c;
  c.d = d;
  c.p_sq = p.value * p.value;
  c.j_first = j.value;
  c.alpha_d = c.p_sq / (j.value * j.value);
  c.ball_volume = ball_volume(d);
  // c_d^{2/d} = exp(2/d * ln c_d); avoids pow on a value that may be tiny.
  c.sw_coeff = std::exp(2.0 / d * log_ball_volume(d)) * c.p_sq;
  const double shift = 0.5 * d - 2.0 / d;
  const double closed = shift > 0.0 ? (d + 2.0) / (shift * shift) : std::numeric_limits<double>::infinity();
  c.alpha_d_closed_form = std::min(0.587, closed);
  return c;
}

double sw_upper_coefficient(int d) {
  check_dimension(d, kMaxDimension);
  return bmc::pi<double>() * std::exp(-2.0 / d * specfun::log_gamma(0.5 * d + 1.0)) * (d + 2.0);
}

double sw_dimensionless_limit() noexcept { return 2.0 * bmc::e<double>() * bmc::pi<double>(); }

double rayleigh_upper_check(int d) {
  check_dimension(d, 200);
  // x = sin(theta): (1-x^2)^{(d-1)/2} dx = cos^d(theta) dtheta.
  const double power = d;
  const auto weight = [power](double theta) { return std::pow(std::cos(theta), power); };
  const auto moment = [power](double theta) {
    const double s = std::sin(theta);
    return std::pow(std::cos(theta), power) * s * s;
  };

  using Quadrature = boost::math::quadrature::gauss_kronrod<double, 31>;
  const double half_pi = bmc::half_pi<double>();
  constexpr double kTolerance = 1e-13;
  constexpr unsigned kMaxDepth = 15;
  double err_num = 0.0;
  double err_den = 0.0;
  // Both integrands are even in theta.
  const double num = Quadrature::integrate(weight, 0.0, half_pi, kMaxDepth, kTolerance, &err_num);
  const double den = Quadrature::integrate(moment, 0.0, half_pi, kMaxDepth, kTolerance, &err_den);
  if (!(den > 0.0) || err_num > 1e-10 * num || err_den > 1e-10 * den) {
    throw NumericalFailure("Rayleigh quotient quadrature did not converge for d = " + std::to_string(d),
                           std::max(err_num / num, err_den / den));
  }
  return num / den;
}

}  // namespace hotspots::constants
