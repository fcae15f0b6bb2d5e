#pragma once

#include <vector>

#include "hotspots/grid_domain.hpp"
#include "hotspots/grid_operator.hpp"

namespace hotspots::pde {

struct EigenOptions {
  double tolerance = 1e-8;  // relative eigen-residual |Au - lambda u| / (lambda |u|)
  int max_outer = 10000;
  double inner_tolerance = 1e-11;
  int max_inner = 200000;
};

/// First nontrivial Neumann pair (mu_1, u) or first Dirichlet pair
/// (lambda_1, phi_1). `field` has nx*ny entries (zero outside D) with
/// h^2 sum field^2 = 1. Neumann fields are mean-free with their largest
/// absolute value positive; Dirichlet fields are positive.
struct EigenPair {
  double eigenvalue = 0.0;
  std::vector<double> field;
  double residual = 0.0;
  Boundary kind = Boundary::neumann;
  int iterations = 0;
};

/// Inverse power iteration (shift 0, constants deflated, CG inner solves).
/// Degenerate eigenvalues return an arbitrary unit member of the eigenspace.
EigenPair neumann_eigenpair(const GridDomain& domain, const EigenOptions& options = {});

EigenPair dirichlet_eigenvalue(const GridDomain& domain, const EigenOptions& options = {});

}  // namespace hotspots::pde
