#include "hotspots/heat.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include "hotspots/errors.hpp"
#include "hotspots/grid_operator.hpp"

namespace hotspots::pde {

namespace {

constexpr int kMaxCgIterations = 100000;

double march(const GridOperator& op, Cell x0, double t, int steps, double tol) {
  const double dt = t / steps;
  const double h = op.h();
  std::vector<double> u = op.zeros();
  std::vector<double> next = op.zeros();
  u[op.padded_index(x0)] = 1.0 / (h * h);
  for (int s = 0; s < steps; ++s) {
    std::copy(u.begin(), u.end(), next.begin());
    const CgResult cg = conjugate_gradient(op, 1.0, dt, u, next, tol, kMaxCgIterations);
    if (!cg.converged) {
      throw NumericalFailure("implicit heat step " + std::to_string(s) + " did not converge",
                             cg.relative_residual);
    }
    u.swap(next);
  }
  return h * h * op.kernels().sum(u);
}

}  // namespace

SurvivalEstimate heat_survival(const GridDomain& domain, Cell x0, double t, const HeatOptions& options) {
  if (!domain.contains(x0)) throw DomainError("heat_survival start cell is not inside the domain");
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("heat_survival requires t > 0");
  if (options.steps < 1) throw DomainError("heat_survival needs at least one step");

  const GridOperator op(domain, Boundary::dirichlet);
  const double coarse = march(op, x0, t, options.steps, options.cg_tolerance);
  const double fine = march(op, x0, t, 2 * options.steps, options.cg_tolerance);

  SurvivalEstimate est;
  est.x0 = x0;
  est.t = t;
  est.survival = std::clamp(coarse, 0.0, 1.0);
  est.method = SurvivalMethod::pde;
  est.error_estimate = std::abs(coarse - fine);
  return est;
}

double unit_square_center_survival(double t) {
  const double pi = boost::math::constants::pi<double>();
  double s = 0.0;
  for (int n = 1; n < 2001; n += 2) {
    const double term = 4.0 / (n * pi) * std::sin(0.5 * n * pi) * std::exp(-n * n * pi * pi * t);
    s += term;
    if (std::abs(term) < 1e-18 && n > 1) break;
  }
  return s * s;
}

}  // namespace hotspots::pde
