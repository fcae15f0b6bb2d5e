#pragma once

#include <span>
#include <vector>

#include "hotspots/grid_domain.hpp"
#include "hotspots/kernels.hpp"

namespace hotspots::pde {

enum class Boundary { neumann, dirichlet };

/// Cell-centered five-point discretization of -Laplacian on a GridDomain.
///
/// Vectors live on a padded (nx+2) x (ny+2) row-major grid and vanish
/// outside D. Neumann uses mirrored ghost cells (zero flux across a face),
/// Dirichlet uses odd ghost cells (zero value on the face), so the row of an
/// inside cell is
///   neumann:   (n_in u_c - sum_in u_n) / h^2
///   dirichlet: ((4 + n_out) u_c - sum_in u_n) / h^2
/// with n_in / n_out the number of inside / outside neighbors. Both are
/// symmetric; constants span the Neumann null space.
class GridOperator {
 public:
  GridOperator(const GridDomain& domain, Boundary bc,
               const simd::KernelTable& kernels = simd::active_kernels());

  Boundary boundary() const noexcept { return bc_; }
  const simd::KernelTable& kernels() const noexcept { return *kernels_; }
  std::size_t size() const noexcept { return mask_.size(); }
  std::size_t stride() const noexcept { return stride_; }
  double h() const noexcept { return h_; }
  double inside_count() const noexcept { return inside_count_; }
  std::span<const double> mask() const noexcept { return mask_; }

  std::size_t padded_index(Cell c) const noexcept { return (c.j + 1) * stride_ + (c.i + 1); }

  /// y = shift * x + scale * A x.
  void apply(std::span<const double> x, std::span<double> y, double shift = 0.0, double scale = 1.0) const;

  std::vector<double> zeros() const { return std::vector<double>(size(), 0.0); }
  std::vector<double> pad(std::span<const double> field) const;
  std::vector<double> unpad(std::span<const double> padded) const;

  /// Subtract the mean over inside cells.
  void remove_mean(std::span<double> x) const;

 private:
  Boundary bc_;
  const simd::KernelTable* kernels_;
  int nx_;
  int ny_;
  std::size_t stride_;
  double h_;
  double inside_count_ = 0.0;
  std::vector<double> mask_;
  std::vector<double> diag_;
};

struct CgResult {
  int iterations = 0;
  double relative_residual = 0.0;
  bool converged = false;
};

/// Conjugate gradients on (shift I + scale A) x = b, starting from the
/// contents of x. With project_constants the Krylov space is kept
/// orthogonal to constants (Neumann, shift = 0).
CgResult conjugate_gradient(const GridOperator& op, double shift, double scale, std::span<const double> b,
                            std::span<double> x, double tolerance, int max_iterations,
                            bool project_constants = false);

}  // namespace hotspots::pde
