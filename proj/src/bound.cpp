#include "hotspots/bound.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <limits>
#include <string>

#include "hotspots/constants.hpp"
#include "hotspots/errors.hpp"

namespace hotspots::bound {

namespace {

namespace bmc = boost::math::constants;

constexpr int kScanPoints = 1024;
constexpr double kScanOffset = 1e-6;
constexpr double kScanWidth = 10.0;
constexpr double kAlphaTolerance = 1e-10;
constexpr double kFeasibilityGap = 1e-14;

void check_inputs(int d, double beta, double M) {
  if (d < constants::kMinDimension) throw DomainError("dimension must be >= 2");
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
  if (!(M > 0.0) || !std::isfinite(M)) throw DomainError("M must be finite and positive");
}

double constant_at(int d, double beta, double M, double alpha) {
  const BoundEvaluation e = evaluate(d, beta, M, alpha);
  return e.feasible ? e.constant : std::numeric_limits<double>::infinity();
}

}  // namespace

double feasible_from(double beta) { return 1.0 / (4.0 * bmc::pi<double>() * (1.0 - beta)); }

BoundEvaluation evaluate(int d, double beta, double M, double alpha) {
  check_inputs(d, beta, M);
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be finite and positive");

  BoundEvaluation e;
  e.alpha = alpha;
  e.survival_bound = std::exp(-0.5 * d * std::log(4.0 * (1.0 - beta) * bmc::pi<double>() * alpha));
  e.growth = std::exp(M * alpha);
  const double gap = 1.0 - e.survival_bound;
  e.feasible = gap > kFeasibilityGap && std::isfinite(e.growth);
  if (e.feasible) {
    e.constant = (e.growth - e.survival_bound) / gap;
    e.ratio_lower_bound = gap / (e.growth - e.survival_bound);
  } else {
    e.constant = std::numeric_limits<double>::infinity();
    e.ratio_lower_bound = 0.0;
  }
  return e;
}

BoundResult optimize(int d, double beta, double M) {
  check_inputs(d, beta, M);

  BoundResult r;
  r.d = d;
  r.beta = beta;
  r.M = M;
  r.feasible_from = feasible_from(beta);

  const double a0 = r.feasible_from * (1.0 + kScanOffset);
  const double a1 = r.feasible_from + kScanWidth;
  const double log_step = std::log(a1 / a0) / (kScanPoints - 1);

  const auto grid = [&](int i) { return i == kScanPoints - 1 ? a1 : a0 * std::exp(log_step * i); };
  int best = -1;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kScanPoints; ++i) {
    const double value = constant_at(d, beta, M, grid(i));
    ++r.evaluations;
    if (value < best_value) {
      best_value = value;
      best = i;
    }
  }
  if (best < 0) {
    throw NumericalFailure("no feasible alpha in (" + std::to_string(a0) + ", " + std::to_string(a1) + "]");
  }

  // Golden section on the scan cell around the best point.
  double lo = grid(std::max(best - 1, 0));
  double hi = grid(std::min(best + 1, kScanPoints - 1));
  const double inv_phi = 1.0 / bmc::phi<double>();
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = constant_at(d, beta, M, x1);
  double f2 = constant_at(d, beta, M, x2);
  r.evaluations += 2;
  while (hi - lo > kAlphaTolerance) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = constant_at(d, beta, M, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = constant_at(d, beta, M, x2);
    }
    ++r.evaluations;
  }

  const double mid = 0.5 * (lo + hi);
  const double f_mid = constant_at(d, beta, M, mid);
  ++r.evaluations;
  r.alpha_star = grid(best);
  r.constant_star = best_value;
  for (const auto& [alpha, value] : {std::pair{x1, f1}, std::pair{x2, f2}, std::pair{mid, f_mid}}) {
    if (value < r.constant_star) {
      r.alpha_star = alpha;
      r.constant_star = value;
    }
  }
  return r;
}

BoundResult hot_spots_constant(int d) {
  const constants::DimensionConstants c = constants::dimension_constants(d);
  return optimize(d, c.alpha_d, c.sw_coeff);
}

BoundResult general_constant(int d, double beta, double M) {
  if (beta >= 1.0) throw DomainError("general_constant requires mu < lambda_1 (beta < 1)");
  return optimize(d, beta, M);
}

double asymptotic_limit() noexcept {
  return std::exp(constants::sw_dimensionless_limit() / (4.0 * bmc::pi<double>()));
}

}  // namespace hotspots::bound
