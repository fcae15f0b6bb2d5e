#pragma once

namespace hotspots::constants {

inline constexpr int kMinDimension = 2;
inline constexpr int kMaxDimension = 500;

/// Dimension-dependent scalars behind the hot-spots bound.
struct DimensionConstants {
  int d = 0;
  double p_sq = 0.0;     // p_{d/2,1}^2, unit-ball Neumann eigenvalue
  double j_first = 0.0;  // j_{d/2-1,1}, sqrt of unit-ball Dirichlet eigenvalue
  // Best constant in mu_1 <= alpha_d * lambda_1 (ratio of the ball eigenvalues).
  double alpha_d = 0.0;
  double ball_volume = 0.0;  // c_d
  // M_d = c_d^{2/d} p^2: bound on mu_1 |D|^{2/d} over all domains.
  double sw_coeff = 0.0;
  // min{0.587, (d+2)/(d/2 - 2/d)^2}, the elementary closed-form bound on alpha_d.
  double alpha_d_closed_form = 0.0;
};

/// c_d = pi^{d/2} / Gamma(d/2 + 1), for 2 <= d <= 500.
double ball_volume(int d);

DimensionConstants dimension_constants(int d);

/// pi / Gamma(d/2+1)^{2/d} * (d+2): the Szego-Weinberger coefficient with
/// p^2 replaced by its upper bound d+2. Increases to 2 e pi.
double sw_upper_coefficient(int d);

/// 2 e pi.
double sw_dimensionless_limit() noexcept;

/// Rayleigh quotient of f(x) = x_1 on the unit d-ball, reduced to
///   int (1-x^2)^{(d-1)/2} dx / int (1-x^2)^{(d-1)/2} x^2 dx  over [-1, 1].
/// Equals d + 2 exactly; computed by adaptive quadrature as an independent
/// certificate that p^2 <= d + 2.
double rayleigh_upper_check(int d);

}  // namespace hotspots::constants
