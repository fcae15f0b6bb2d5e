#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "hotspots/grid_domain.hpp"
#include "hotspots/verify.hpp"

namespace hotspots::mc {

/// Counter-based generator: output k of stream s is a SplitMix64 hash of
/// (key(seed, s), k). Streams are independent of evaluation order.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
  result_type operator()() noexcept;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct WalkConfig {
  std::size_t n_paths = 100000;
  double dt = 1e-4;
  std::uint64_t seed = 0x5eed;
  double t = 0.1;
  unsigned threads = 1;
};

/// Generator of the walk is the Laplacian: each coordinate moves by
/// sqrt(2 dt) N(0, 1) per step.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(n)
  std::size_t n_effective = 0;
};

/// Rejects dt <= 0, dt > t, zero paths or zero threads.
void validate(const WalkConfig& cfg);

/// True when cfg meets the bar for reported estimates: dt <= t/16 and at
/// least 1000 paths.
bool reportable(const WalkConfig& cfg) noexcept;

/// Map a coordinate of the free line onto [0, a] by repeated reflection.
double fold(double x, double a) noexcept;

/// Reflected Brownian motion in (0,a)x(0,b) by exact folding; returns the
/// mean of u(w(t)) for u(x, y) = cos(pi x / a), whose expectation is
/// exp(-(pi/a)^2 t) cos(pi x0 / a).
McEstimate reflected_expectation_rectangle(double a, double b, Point x0, const WalkConfig& cfg);

/// Endpoints of the same reflected walks, in path order.
std::vector<Point> reflected_endpoints_rectangle(double a, double b, Point x0, const WalkConfig& cfg);

/// Fraction of Euler-Maruyama paths from the center of x0 that stay inside
/// the mask up to cfg.t. A path is absorbed at the first step ending in an
/// outside cell; crossings within a step are not seen, which biases the
/// estimate upward by O(sqrt(dt)).
McEstimate absorbed_survival(const pde::GridDomain& domain, pde::Cell x0, const WalkConfig& cfg);

/// Survival at several horizons from one path set (cfg.t is ignored).
/// Horizons must be positive and increasing; estimates are non-increasing.
std::vector<McEstimate> absorbed_survival_horizons(const pde::GridDomain& domain, pde::Cell x0,
                                                   const WalkConfig& cfg, std::span<const double> horizons);

struct McLemma1Report {
  pde::Lemma1Report probe;
  double std_error = 0.0;
  double tolerance = 0.0;  // 3 sigma e^{mu t} + 5e-3
  bool passed = false;
};

/// Survival inequality with S estimated by absorbed walks from the argmax
/// cell of the Neumann eigenfunction.
McLemma1Report lemma1_mc(const pde::GridDomain& domain, double t, const WalkConfig& cfg);
McLemma1Report lemma1_mc(const pde::GridDomain& domain, const pde::HotSpotsReport& report, double t,
                         const WalkConfig& cfg);

}  // namespace hotspots::mc
