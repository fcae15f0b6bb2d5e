#include "hotspots/specfun.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "hotspots/errors.hpp"

namespace hotspots::specfun {

namespace {

constexpr double kScanStep = 0.1;
constexpr int kMaxSeriesTerms = 20000;
constexpr mpfr_prec_t kBaseBits = 80;

// Owning mpfr_t with a fixed precision.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t bits) { mpfr_init2(value_, bits); }
  ~MpReal() { mpfr_clear(value_); }
  MpReal(const MpReal&) = delete;
  MpReal& operator=(const MpReal&) = delete;

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }

 private:
  mpfr_t value_;
};

}  // namespace

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("log_gamma requires a finite positive argument");
  }
  // lgamma_r does not touch the global signgam.
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

namespace {

// log of the largest |term| of the J_nu series at x, and the index where it
// occurs. Terms grow while (x/2)^2 > (m+1)(m+nu+1).
struct SeriesPeak {
  double log_magnitude;
  double index;
};

SeriesPeak series_peak(double nu, double x) {
  const double q = 0.25 * x * x;
  // Positive root of (m+1)(m+nu+1) = q.
  const double b = nu + 2.0;
  const double c = nu + 1.0 - q;
  const double disc = b * b - 4.0 * c;
  double m = disc > 0.0 ? std::max(0.0, std::floor(0.5 * (-b + std::sqrt(disc))) + 1.0) : 0.0;
  const double log_half = std::log(0.5 * x);
  const auto log_term = [&](double k) {
    return (2.0 * k + nu) * log_half - log_gamma(k + 1.0) - log_gamma(k + nu + 1.0);
  };
  return {std::max(log_term(m), m > 0.0 ? log_term(m - 1.0) : log_term(m)), m};
}

double series(double nu, double x) {
  const SeriesPeak peak = series_peak(nu, x);
  const double extra_bits = std::max(0.0, peak.log_magnitude / std::log(2.0));
  const auto bits = static_cast<mpfr_prec_t>(kBaseBits + std::ceil(extra_bits));

  MpReal half(bits), q(bits), term(bits), sum(bits), scratch(bits);
  mpfr_set_d(half.get(), 0.5 * x, MPFR_RNDN);
  mpfr_sqr(q.get(), half.get(), MPFR_RNDN);

  // Leading term (x/2)^nu / Gamma(nu+1), formed in log space.
  if (nu == 0.0) {
    mpfr_set_ui(term.get(), 1, MPFR_RNDN);
  } else {
    int sign = 0;
    mpfr_log(term.get(), half.get(), MPFR_RNDN);
    mpfr_mul_d(term.get(), term.get(), nu, MPFR_RNDN);
    mpfr_set_d(scratch.get(), nu + 1.0, MPFR_RNDN);
    mpfr_lgamma(scratch.get(), &sign, scratch.get(), MPFR_RNDN);
    mpfr_sub(term.get(), term.get(), scratch.get(), MPFR_RNDN);
    mpfr_exp(term.get(), term.get(), MPFR_RNDN);
  }
  mpfr_set(sum.get(), term.get(), MPFR_RNDN);

  for (int m = 0; m < kMaxSeriesTerms; ++m) {
    mpfr_mul(term.get(), term.get(), q.get(), MPFR_RNDN);
    mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(m + 1), MPFR_RNDN);
    mpfr_div_d(term.get(), term.get(), m + 1 + nu, MPFR_RNDN);
    mpfr_neg(term.get(), term.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);

    if (m + 1 > peak.index) {
      if (mpfr_zero_p(term.get())) break;
      const long term_exp = mpfr_get_exp(term.get());
      if (mpfr_zero_p(sum.get())) continue;
      if (term_exp < mpfr_get_exp(sum.get()) - static_cast<long>(kBaseBits)) break;
    }
  }
  return mpfr_get_d(sum.get(), MPFR_RNDN);
}

std::string describe_interval(double lo, double hi) {
  std::ostringstream os;
  os.precision(17);
  os << "[" << lo << ", " << hi << "]";
  return os.str();
}

// Bisect f on [lo, hi] (f(lo), f(hi) of opposite sign) down to adjacent
// doubles, then take one secant step from the final bracket.
template <typename F, typename Normalize>
RootResult refine_root(F&& f, Normalize&& normalize, double lo, double hi, int iterations) {
  RootResult result;
  result.bracket_lo = lo;
  result.bracket_hi = hi;

  double f_lo = f(lo);
  double f_hi = f(hi);
  while (true) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    ++iterations;
    if (f_mid == 0.0) {
      lo = hi = mid;
      f_lo = f_hi = 0.0;
      break;
    }
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }

  double best = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
  double f_best = std::abs(f_lo) <= std::abs(f_hi) ? f_lo : f_hi;
  if (hi > lo && f_hi != f_lo) {
    const double secant = lo - f_lo * (hi - lo) / (f_hi - f_lo);
    if (secant > lo && secant < hi) {
      const double f_secant = f(secant);
      ++iterations;
      if (std::abs(f_secant) < std::abs(f_best)) {
        best = secant;
        f_best = f_secant;
      }
    }
  }

  result.value = best;
  result.residual = normalize(best, f_best);
  result.iterations = iterations;
  return result;
}

}  // namespace

BesselOrder::BesselOrder(double nu) : nu_(nu) {
  if (!std::isfinite(nu) || nu < 0.0) {
    throw DomainError("Bessel order must be finite and nonnegative");
  }
}

double bessel_j_max_argument(BesselOrder nu) noexcept { return 2.0 * (nu.value() + 10.0); }

double bessel_j(BesselOrder order, double x) {
  const double nu = order.value();
  if (!(x >= 0.0) || x > bessel_j_max_argument(order)) {
    throw RangeError("bessel_j argument outside [0, 2(nu+10)]");
  }
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  return series(nu, x);
}

RootResult first_bessel_zero(BesselOrder order) {
  const double nu = order.value();
  const double x_max = bessel_j_max_argument(order);
  const auto f = [&](double x) { return bessel_j(order, x); };

  double lo = nu > 0.0 ? std::sqrt(nu * (nu + 2.0)) : kScanStep;
  double f_lo = f(lo);
  int iterations = 1;
  double hi = lo;
  while (true) {
    hi = lo + kScanStep;
    if (hi > x_max) {
      throw NumericalFailure("no sign change of J_nu while scanning " +
                             describe_interval(nu > 0.0 ? std::sqrt(nu * (nu + 2.0)) : kScanStep, x_max));
    }
    const double f_hi = f(hi);
    ++iterations;
    if (f_hi == 0.0) return {hi, lo, hi + kScanStep, 0.0, iterations};
    if (std::signbit(f_hi) != std::signbit(f_lo)) break;
    lo = hi;
    f_lo = f_hi;
  }
  return refine_root(f, [](double, double fx) { return fx; }, lo, hi, iterations);
}

RootResult neumann_ball_root(int d) {
  if (d < 2) throw DomainError("neumann_ball_root requires d >= 2");
  const BesselOrder lower(0.5 * d - 1.0);
  const BesselOrder upper(0.5 * d);
  const auto g = [&](double x) { return x * bessel_j(lower, x) - (d - 1) * bessel_j(upper, x); };
  const auto normalize = [&](double x, double gx) {
    return gx / std::max(1.0, std::abs(x * bessel_j(lower, x)));
  };

  // Lorch-Szego: d + 8/(d+6) < p^2 < d + 2.
  const double lo = std::sqrt(d + 8.0 / (d + 6.0));
  const double hi = std::sqrt(d + 2.0);
  const double g_lo = g(lo);
  const double g_hi = g(hi);
  if (g_lo == 0.0 || g_hi == 0.0 || std::signbit(g_lo) == std::signbit(g_hi)) {
    throw NumericalFailure("no sign change of the Neumann ball root function on " +
                           describe_interval(lo, hi));
  }
  return refine_root(g, normalize, lo, hi, 2);
}

}  // namespace hotspots::specfun
