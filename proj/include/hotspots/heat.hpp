#pragma once

#include "hotspots/grid_domain.hpp"

namespace hotspots::pde {

enum class SurvivalMethod { pde, closed_form, monte_carlo };

/// Probability that Brownian motion from x0 has not left D by time t, i.e.
/// the mass of the Dirichlet heat kernel p_t(x0, .).
struct SurvivalEstimate {
  Cell x0;
  double t = 0.0;
  double survival = 0.0;
  SurvivalMethod method = SurvivalMethod::pde;
  double error_estimate = 0.0;
};

struct HeatOptions {
  int steps = 512;
  double cg_tolerance = 1e-12;
};

/// Implicit Euler for u_t = Laplacian u, u = 0 on the boundary, started from
/// a unit point mass (1/h^2 on x0) with dt = t/steps. The error estimate is
/// the change when the step is halved.
SurvivalEstimate heat_survival(const GridDomain& domain, Cell x0, double t, const HeatOptions& options = {});

/// Separable Fourier series for the unit square from its center:
///   [sum_{n odd} 4/(n pi) sin(n pi/2) exp(-n^2 pi^2 t)]^2.
double unit_square_center_survival(double t);

}  // namespace hotspots::pde
