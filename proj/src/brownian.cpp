#include "hotspots/brownian.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "hotspots/errors.hpp"

namespace hotspots::mc {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Run body(path) for every path, split into contiguous blocks per thread.
template <typename Body>
void for_each_path(std::size_t n_paths, unsigned threads, Body&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n_paths, 1))));
  if (threads == 1) {
    for (std::size_t p = 0; p < n_paths; ++p) body(p);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  const std::size_t block = (n_paths + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t begin = w * block;
    const std::size_t end = std::min(n_paths, begin + block);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] {
      for (std::size_t p = begin; p < end; ++p) body(p);
    });
  }
}

// Mean and standard error, summed in path order.
McEstimate summarize(std::span<const double> samples) {
  McEstimate est;
  est.n_effective = samples.size();
  const double n = static_cast<double>(samples.size());
  double sum = 0.0;
  for (const double v : samples) sum += v;
  est.mean = sum / n;
  double sq = 0.0;
  for (const double v : samples) sq += (v - est.mean) * (v - est.mean);
  est.std_error = samples.size() > 1 ? std::sqrt(sq / (n - 1.0)) / std::sqrt(n) : 0.0;
  return est;
}

void check_rectangle(double a, double b, Point x0) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("rectangle sides must be positive");
  if (!(x0.x > 0.0 && x0.x < a && x0.y > 0.0 && x0.y < b)) {
    throw DomainError("start point must lie strictly inside the rectangle");
  }
}

template <typename Visit>
void reflected_walks(double a, double b, Point x0, const WalkConfig& cfg, Visit&& visit) {
  validate(cfg);
  check_rectangle(a, b, x0);
  const auto steps = static_cast<std::size_t>(std::ceil(cfg.t / cfg.dt - 1e-9));
  for_each_path(cfg.n_paths, cfg.threads, [&](std::size_t path) {
    CounterRng rng(cfg.seed, path);
    std::normal_distribution<double> normal;
    Point p = x0;
    double elapsed = 0.0;
    for (std::size_t s = 0; s < steps; ++s) {
      const double dt = std::min(cfg.dt, cfg.t - elapsed);
      elapsed += dt;
      const double sigma = std::sqrt(2.0 * dt);
      p.x = fold(p.x + sigma * normal(rng), a);
      p.y = fold(p.y + sigma * normal(rng), b);
    }
    visit(path, p);
  });
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_(splitmix(seed ^ splitmix(stream * kGolden + 1))) {}

CounterRng::result_type CounterRng::operator()() noexcept { return splitmix(key_ + (++counter_) * kGolden); }

void validate(const WalkConfig& cfg) {
  if (!(cfg.t > 0.0) || !std::isfinite(cfg.t)) throw DomainError("walk horizon t must be positive");
  if (!(cfg.dt > 0.0) || cfg.dt > cfg.t * (1.0 + 1e-12)) throw DomainError("walk step dt must lie in (0, t]");
  if (cfg.n_paths == 0) throw DomainError("walk needs at least one path");
  if (cfg.threads == 0) throw DomainError("walk needs at least one thread");
}

bool reportable(const WalkConfig& cfg) noexcept { return cfg.dt <= cfg.t / 16.0 && cfg.n_paths >= 1000; }

double fold(double x, double a) noexcept {
  double y = std::fmod(x, 2.0 * a);
  if (y < 0.0) y += 2.0 * a;
  return y > a ? 2.0 * a - y : y;
}

McEstimate reflected_expectation_rectangle(double a, double b, Point x0, const WalkConfig& cfg) {
  const double k = boost::math::constants::pi<double>() / a;
  std::vector<double> values(cfg.n_paths);
  reflected_walks(a, b, x0, cfg, [&](std::size_t path, Point p) { values[path] = std::cos(k * p.x); });
  return summarize(values);
}

std::vector<Point> reflected_endpoints_rectangle(double a, double b, Point x0, const WalkConfig& cfg) {
  std::vector<Point> out(cfg.n_paths);
  reflected_walks(a, b, x0, cfg, [&](std::size_t path, Point p) { out[path] = p; });
  return out;
}

McEstimate absorbed_survival(const pde::GridDomain& domain, pde::Cell x0, const WalkConfig& cfg) {
  validate(cfg);
  const double horizon[] = {cfg.t};
  return absorbed_survival_horizons(domain, x0, cfg, horizon).front();
}

std::vector<McEstimate> absorbed_survival_horizons(const pde::GridDomain& domain, pde::Cell x0,
                                                   const WalkConfig& cfg, std::span<const double> horizons) {
  if (!domain.contains(x0)) throw DomainError("walk start cell is not inside the domain");
  if (horizons.empty()) throw DomainError("at least one horizon is required");
  for (std::size_t k = 0; k < horizons.size(); ++k) {
    if (!(horizons[k] > 0.0) || (k > 0 && !(horizons[k] > horizons[k - 1]))) {
      throw DomainError("horizons must be positive and increasing");
    }
  }
  WalkConfig check = cfg;
  check.t = horizons.back();
  validate(check);

  const double h = domain.h();
  const std::size_t n_h = horizons.size();
  // survived[path] = number of horizons the path outlived.
  std::vector<std::uint32_t> survived(cfg.n_paths, 0);
  for_each_path(cfg.n_paths, cfg.threads, [&](std::size_t path) {
    CounterRng rng(cfg.seed, path);
    std::normal_distribution<double> normal;
    double x = (x0.i + 0.5) * h;
    double y = (x0.j + 0.5) * h;
    double elapsed = 0.0;
    std::size_t next = 0;
    while (next < n_h) {
      const double dt = std::min(cfg.dt, horizons[next] - elapsed);
      const double sigma = std::sqrt(2.0 * dt);
      x += sigma * normal(rng);
      y += sigma * normal(rng);
      elapsed += dt;
      const pde::Cell c{static_cast<int>(std::floor(x / h)), static_cast<int>(std::floor(y / h))};
      if (x < 0.0 || y < 0.0 || !domain.contains(c)) break;
      if (elapsed >= horizons[next] * (1.0 - 1e-12)) {
        elapsed = horizons[next];
        ++next;
      }
    }
    survived[path] = static_cast<std::uint32_t>(next);
  });

  std::vector<McEstimate> out;
  out.reserve(n_h);
  std::vector<double> indicator(cfg.n_paths);
  for (std::size_t k = 0; k < n_h; ++k) {
    for (std::size_t p = 0; p < cfg.n_paths; ++p) indicator[p] = survived[p] > k ? 1.0 : 0.0;
    out.push_back(summarize(indicator));
  }
  return out;
}

McLemma1Report lemma1_mc(const pde::GridDomain& domain, double t, const WalkConfig& cfg) {
  return lemma1_mc(domain, pde::hot_spots_report(domain), t, cfg);
}

McLemma1Report lemma1_mc(const pde::GridDomain& domain, const pde::HotSpotsReport& report, double t,
                         const WalkConfig& cfg) {
  WalkConfig walk = cfg;
  walk.t = t;
  const McEstimate s = absorbed_survival(domain, report.argmax, walk);
  McLemma1Report r;
  r.probe = pde::lemma1_probe(report.mu1, t, s.mean, report.boundary_max / report.domain_max);
  r.probe.survival_error = s.std_error;
  r.std_error = s.std_error;
  r.tolerance = 3.0 * s.std_error * std::exp(report.mu1 * t) + pde::kLemma1Tolerance;
  r.passed = r.probe.slack >= -r.tolerance;
  return r;
}

}  // namespace hotspots::mc
