#pragma once

// Data-parallel inner loops of the grid solvers. Every kernel has a scalar
// reference implementation; an AVX2+FMA variant is selected at runtime when
// the CPU supports it. Set HOTSPOTS_SIMD=scalar to force the reference path.

#include <cstddef>
#include <span>

namespace hotspots::simd {

enum class Isa { scalar, avx2 };

// Five-point operator on a padded row-major grid (row length `stride`):
//   y[i] = mask[i] * ((shift + scale*diag[i]) * x[i]
//                     - scale * (x[i-1] + x[i+1] + x[i-stride] + x[i+stride]))
// for i in [begin, end). x must vanish wherever mask is zero.
struct StencilArgs {
  std::span<const double> x;
  std::span<double> y;
  std::span<const double> diag;
  std::span<const double> mask;
  std::size_t stride = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
  double scale = 1.0;
  double shift = 0.0;
};

struct KernelTable {
  Isa isa;
  const char* name;
  void (*stencil)(const StencilArgs& args);
  double (*dot)(std::span<const double> x, std::span<const double> y);
  // y += a * x
  void (*axpy)(double a, std::span<const double> x, std::span<double> y);
  // y = x + b * y
  void (*xpay)(std::span<const double> x, double b, std::span<double> y);
  double (*sum)(std::span<const double> x);
};

const KernelTable& scalar_kernels();

/// nullptr unless the build has the AVX2 kernels and the CPU runs them.
const KernelTable* avx2_kernels();

/// Chosen once per process.
const KernelTable& active_kernels();

}  // namespace hotspots::simd
