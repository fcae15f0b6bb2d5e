#include "kernels_impl.hpp"

namespace hotspots::simd::detail::scalar {

void stencil(const RawStencil& a) {
  const std::size_t s = a.stride;
  for (std::size_t i = a.begin; i < a.end; ++i) {
    const double neighbors = a.x[i - 1] + a.x[i + 1] + a.x[i - s] + a.x[i + s];
    a.y[i] = a.mask[i] * ((a.shift + a.scale * a.diag[i]) * a.x[i] - a.scale * neighbors);
  }
}

double dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void xpay(const double* x, double b, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + b * y[i];
}

double sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

}  // namespace hotspots::simd::detail::scalar
