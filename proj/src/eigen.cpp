#include "hotspots/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hotspots/errors.hpp"

namespace hotspots::pde {

namespace {

void normalize(const GridOperator& op, std::vector<double>& x) {
  const double norm = std::sqrt(op.kernels().dot(x, x));
  for (double& v : x) v /= norm;
}

EigenPair inverse_iteration(const GridDomain& domain, Boundary bc, const EigenOptions& opt) {
  const GridOperator op(domain, bc);
  const auto& k = op.kernels();
  const bool neumann = bc == Boundary::neumann;

  // Start: positive bump for Dirichlet, a tilted linear profile for Neumann.
  std::vector<double> x = op.zeros();
  for (int j = 0; j < domain.ny(); ++j) {
    for (int i = 0; i < domain.nx(); ++i) {
      if (!domain.contains({i, j})) continue;
      const double px = (i + 0.5) / domain.nx();
      const double py = (j + 0.5) / domain.ny();
      x[op.padded_index({i, j})] = neumann ? px + 0.37 * py : 1.0 + px * (1.0 - px) + py * (1.0 - py);
    }
  }
  if (neumann) op.remove_mean(x);
  normalize(op, x);

  std::vector<double> ax = op.zeros();
  std::vector<double> y = op.zeros();
  op.apply(x, ax);
  double lambda = k.dot(x, ax);
  double residual = 0.0;

  EigenPair pair;
  pair.kind = bc;
  for (int outer = 1; outer <= opt.max_outer; ++outer) {
    // Warm start: near convergence A^{-1} x ~ x / lambda.
    std::copy(x.begin(), x.end(), y.begin());
    for (double& v : y) v /= lambda;
    const CgResult cg = conjugate_gradient(op, 0.0, 1.0, x, y, opt.inner_tolerance, opt.max_inner, neumann);
    if (!cg.converged) {
      throw NumericalFailure("inner CG solve did not converge (relative residual " +
                                 std::to_string(cg.relative_residual) + ")",
                             residual);
    }
    x.swap(y);
    if (neumann) op.remove_mean(x);
    normalize(op, x);

    op.apply(x, ax);
    lambda = k.dot(x, ax);
    // ax - lambda x
    k.axpy(-lambda, x, ax);
    residual = std::sqrt(k.dot(ax, ax)) / lambda;
    pair.iterations = outer;
    if (residual <= opt.tolerance) break;
    if (outer == opt.max_outer) {
      throw NumericalFailure("inverse iteration did not reach the eigen-residual tolerance", residual);
    }
  }

  pair.eigenvalue = lambda;
  pair.residual = residual;
  pair.field = op.unpad(x);

  // Unit L2 norm in area measure.
  const double scale = 1.0 / domain.h();
  const auto [lo, hi] = std::minmax_element(pair.field.begin(), pair.field.end());
  const double sign = (neumann ? (-*lo > *hi) : (*hi <= 0.0)) ? -1.0 : 1.0;
  for (double& v : pair.field) v *= sign * scale;
  return pair;
}

}  // namespace

EigenPair neumann_eigenpair(const GridDomain& domain, const EigenOptions& options) {
  return inverse_iteration(domain, Boundary::neumann, options);
}

EigenPair dirichlet_eigenvalue(const GridDomain& domain, const EigenOptions& options) {
  return inverse_iteration(domain, Boundary::dirichlet, options);
}

}  // namespace hotspots::pde
