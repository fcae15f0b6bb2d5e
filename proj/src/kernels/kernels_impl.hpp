#pragma once

// Raw-pointer kernel entry points. Kept free of standard-library templates so
// the AVX2 translation unit cannot leak AVX2-compiled inline code into the
// portable path.

#include <cstddef>

namespace hotspots::simd::detail {

struct RawStencil {
  const double* x;
  double* y;
  const double* diag;
  const double* mask;
  std::size_t stride;
  std::size_t begin;
  std::size_t end;
  double scale;
  double shift;
};

namespace scalar {
void stencil(const RawStencil& a);
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void xpay(const double* x, double b, double* y, std::size_t n);
double sum(const double* x, std::size_t n);
}  // namespace scalar

#if defined(HOTSPOTS_HAVE_AVX2)
namespace avx2 {
void stencil(const RawStencil& a);
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void xpay(const double* x, double b, double* y, std::size_t n);
double sum(const double* x, std::size_t n);
}  // namespace avx2
#endif

}  // namespace hotspots::simd::detail
