#pragma once

#include <span>
#include <vector>

#include "hotspots/eigen.hpp"
#include "hotspots/grid_domain.hpp"
#include "hotspots/heat.hpp"

namespace hotspots::pde {

/// Interior versus boundary maximum of the computed first Neumann
/// eigenfunction, set against the proven planar bound.
///
/// The boundary is the layer of inside cells that touch an outside cell.
/// u is sign-normalized so that its sup norm is attained at a positive value.
struct HotSpotsReport {
  double mu1 = 0.0;
  double lambda1 = 0.0;
  double area = 0.0;
  double interior_max = 0.0;  // max u over cells off the boundary layer
  double domain_max = 0.0;    // ||u||_inf over all of D
  double boundary_max = 0.0;  // ||u||_inf over the boundary layer
  double ratio = 0.0;         // domain_max / boundary_max
  double bound = 0.0;         // hot-spots constant for d = 2
  Cell argmax;                // lowest row-major index attaining domain_max
  bool mu_lt_lambda = false;
  bool bound_satisfied = false;
};

HotSpotsReport hot_spots_report(const GridDomain& domain);
HotSpotsReport hot_spots_report(const GridDomain& domain, const EigenPair& neumann, const EigenPair& dirichlet,
                                double bound);

/// One probe of 1 <= e^{mu t} S + e^{mu t} (1 - S) ||u||_bd / ||u||_D.
struct Lemma1Report {
  double t = 0.0;
  double survival = 0.0;
  double survival_error = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - 1
};

/// Slack allowed for discretization error.
inline constexpr double kLemma1Tolerance = 5e-3;

Lemma1Report lemma1_probe(double mu1, double t, double survival, double boundary_ratio);

/// Evaluate the inequality at each t with S from the PDE survival solver,
/// started at the argmax cell of the Neumann eigenfunction.
std::vector<Lemma1Report> lemma1_check(const GridDomain& domain, std::span<const double> t_grid);
std::vector<Lemma1Report> lemma1_check(const GridDomain& domain, const HotSpotsReport& report,
                                       std::span<const double> t_grid, const HeatOptions& options = {});

}  // namespace hotspots::pde
