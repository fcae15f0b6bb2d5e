#include "hotspots/verify.hpp"

#include <cmath>

#include "hotspots/bound.hpp"
#include "hotspots/errors.hpp"

namespace hotspots::pde {

namespace {

constexpr double kMuLambdaMargin = 1e-6;

}  // namespace

HotSpotsReport hot_spots_report(const GridDomain& domain) {
  const EigenPair neumann = neumann_eigenpair(domain);
  const EigenPair dirichlet = dirichlet_eigenvalue(domain);
  return hot_spots_report(domain, neumann, dirichlet, bound::hot_spots_constant(2).constant_star);
}

HotSpotsReport hot_spots_report(const GridDomain& domain, const EigenPair& neumann, const EigenPair& dirichlet,
                                double bound) {
  HotSpotsReport r;
  r.mu1 = neumann.eigenvalue;
  r.lambda1 = dirichlet.eigenvalue;
  r.area = domain.area();
  r.bound = bound;

  for (int j = 0; j < domain.ny(); ++j) {
    for (int i = 0; i < domain.nx(); ++i) {
      const Cell c{i, j};
      if (!domain.contains(c)) continue;
      const double u = neumann.field[domain.index(c)];
      if (std::abs(u) > r.domain_max) {
        r.domain_max = std::abs(u);
        r.argmax = c;
      }
      if (domain.is_boundary(c)) {
        r.boundary_max = std::max(r.boundary_max, std::abs(u));
      } else {
        r.interior_max = std::max(r.interior_max, u);
      }
    }
  }
  if (!(r.boundary_max > 0.0)) throw NumericalFailure("eigenfunction vanishes on the boundary layer");
  r.ratio = r.domain_max / r.boundary_max;
  r.mu_lt_lambda = r.mu1 < r.lambda1 * (1.0 - kMuLambdaMargin);
  r.bound_satisfied = r.ratio <= r.bound;
  return r;
}

Lemma1Report lemma1_probe(double mu1, double t, double survival, double boundary_ratio) {
  Lemma1Report r;
  r.t = t;
  r.survival = survival;
  const double growth = std::exp(mu1 * t);
  r.rhs = growth * survival + growth * (1.0 - survival) * boundary_ratio;
  r.slack = r.rhs - 1.0;
  return r;
}

std::vector<Lemma1Report> lemma1_check(const GridDomain& domain, std::span<const double> t_grid) {
  return lemma1_check(domain, hot_spots_report(domain), t_grid);
}

std::vector<Lemma1Report> lemma1_check(const GridDomain& domain, const HotSpotsReport& report,
                                       std::span<const double> t_grid, const HeatOptions& options) {
  std::vector<Lemma1Report> out;
  out.reserve(t_grid.size());
  for (const double t : t_grid) {
    const SurvivalEstimate s = heat_survival(domain, report.argmax, t, options);
    Lemma1Report probe = lemma1_probe(report.mu1, t, s.survival, report.boundary_max / report.domain_max);
    probe.survival_error = s.error_estimate;
    out.push_back(probe);
  }
  return out;
}

}  // namespace hotspots::pde
