#pragma once

// The hot-spots bound as a function of rescaled time alpha = t |D|^{-2/d}:
//
//   1 <= K + (E - K) * r,   K = (4 (1-beta) pi alpha)^{-d/2},  E = exp(M alpha),
//
// where r = ||u||_{L^inf(boundary)} / ||u||_{L^inf(D)}, beta bounds mu/lambda_1
// and M bounds mu |D|^{2/d}. Whenever K < 1 this gives r >= (1-K)/(E-K), i.e.
// the interior maximum is at most (E-K)/(1-K) times the boundary maximum.

namespace hotspots::bound {

struct BoundEvaluation {
  double alpha = 0.0;
  double survival_bound = 0.0;  // K
  double growth = 0.0;          // E
  // (1-K)/(E-K); zero when infeasible.
  double ratio_lower_bound = 0.0;
  // (E-K)/(1-K); +inf when infeasible.
  double constant = 0.0;
  bool feasible = false;
};

struct BoundResult {
  int d = 0;
  double beta = 0.0;
  double M = 0.0;
  double alpha_star = 0.0;
  double constant_star = 0.0;
  // Rescaled time at which K = 1; every feasible alpha is larger.
  double feasible_from = 0.0;
  int evaluations = 0;
};

/// alpha at which K(alpha) = 1.
double feasible_from(double beta);

/// Evaluate the bound at one alpha. Infeasible alphas (K >= 1, or K within
/// 1e-14 of 1) come back flagged rather than throwing.
BoundEvaluation evaluate(int d, double beta, double M, double alpha);

/// Minimize the constant over alpha: 1024-point log-spaced scan over
/// (feasible_from (1+1e-6), feasible_from + 10], then golden section on the
/// best bracket down to |dalpha| <= 1e-10.
BoundResult optimize(int d, double beta, double M);

/// The dimension's hot-spots constant: beta = alpha_d, M = c_d^{2/d} p^2.
BoundResult hot_spots_constant(int d);

/// Constant for a caller-supplied ratio beta = mu/lambda_1 < 1 and a
/// dimensionless bound M >= mu |D|^{2/d}.
BoundResult general_constant(int d, double beta, double M);

/// Large-d limit of the constant, exp(2 e pi / (4 pi)) = e^{e/2}.
double asymptotic_limit() noexcept;

}  // namespace hotspots::bound
