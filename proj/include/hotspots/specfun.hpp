#pragma once

// Real-order Bessel functions of the first kind and the two root families
// used by the eigenvalue-ratio constants: j_{nu,1} (first zero of J_nu) and
// p_{d/2,1} (first positive critical point of x^{1-d/2} J_{d/2}(x)).

namespace hotspots::specfun {

/// Order of J_nu. Finite and nonnegative.
class BesselOrder {
 public:
  explicit BesselOrder(double nu);

  double value() const noexcept { return nu_; }

 private:
  double nu_;
};

struct RootResult {
  double value = 0.0;
  // Certifying bracket: the sign change that was refined (lo < value < hi).
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  // Normalized root function at value.
  double residual = 0.0;
  int iterations = 0;
};

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// J_nu(x) from the ascending power series, 0 <= x <= 2(nu + 10).
///
/// The series alternates and its terms peak near I_nu(x), so the partial
/// sums are carried in extended precision sized to the largest term. The
/// result is accurate to ~1e-16 absolute over the whole supported range.
double bessel_j(BesselOrder nu, double x);

/// Largest x accepted by bessel_j for this order.
double bessel_j_max_argument(BesselOrder nu) noexcept;

/// Smallest positive zero j_{nu,1} of J_nu.
RootResult first_bessel_zero(BesselOrder nu);

/// p_{d/2,1}, the smallest positive root of x J_{d/2-1}(x) = (d-1) J_{d/2}(x).
/// Its square is the first nontrivial Neumann eigenvalue of the unit d-ball.
RootResult neumann_ball_root(int d);

}  // namespace hotspots::specfun
