#include "hotspots/grid_operator.hpp"

#include <cmath>

namespace hotspots::pde {

GridOperator::GridOperator(const GridDomain& domain, Boundary bc, const simd::KernelTable& kernels)
    : bc_(bc),
      kernels_(&kernels),
      nx_(domain.nx()),
      ny_(domain.ny()),
      stride_(static_cast<std::size_t>(domain.nx()) + 2),
      h_(domain.h()) {
  const std::size_t n = stride_ * (static_cast<std::size_t>(ny_) + 2);
  mask_.assign(n, 0.0);
  diag_.assign(n, 0.0);
  for (int j = 0; j < ny_; ++j) {
    for (int i = 0; i < nx_; ++i) {
      if (!domain.contains({i, j})) continue;
      const std::size_t k = padded_index({i, j});
      int inside = 0;
      for (const Cell nb : {Cell{i + 1, j}, Cell{i - 1, j}, Cell{i, j + 1}, Cell{i, j - 1}}) {
        inside += domain.contains(nb) ? 1 : 0;
      }
      mask_[k] = 1.0;
      diag_[k] = bc == Boundary::neumann ? inside : 4.0 + (4 - inside);
      inside_count_ += 1.0;
    }
  }
}

void GridOperator::apply(std::span<const double> x, std::span<double> y, double shift, double scale) const {
  simd::StencilArgs args;
  args.x = x;
  args.y = y;
  args.diag = diag_;
  args.mask = mask_;
  args.stride = stride_;
  args.begin = stride_;
  args.end = size() - stride_;
  args.scale = scale / (h_ * h_);
  args.shift = shift;
  kernels_->stencil(args);
}

std::vector<double> GridOperator::pad(std::span<const double> field) const {
  std::vector<double> out = zeros();
  for (int j = 0; j < ny_; ++j) {
    for (int i = 0; i < nx_; ++i) {
      const std::size_t k = padded_index({i, j});
      out[k] = mask_[k] * field[static_cast<std::size_t>(j) * nx_ + i];
    }
  }
  return out;
}

std::vector<double> GridOperator::unpad(std::span<const double> padded) const {
  std::vector<double> out(static_cast<std::size_t>(nx_) * ny_, 0.0);
  for (int j = 0; j < ny_; ++j) {
    for (int i = 0; i < nx_; ++i) out[static_cast<std::size_t>(j) * nx_ + i] = padded[padded_index({i, j})];
  }
  return out;
}

void GridOperator::remove_mean(std::span<double> x) const {
  const double mean = kernels_->sum(x) / inside_count_;
  kernels_->axpy(-mean, mask_, x);
}

CgResult conjugate_gradient(const GridOperator& op, double shift, double scale, std::span<const double> b,
                            std::span<double> x, double tolerance, int max_iterations, bool project_constants) {
  const auto& k = op.kernels();
  std::vector<double> r(b.begin(), b.end());
  std::vector<double> ap = op.zeros();
  if (project_constants) {
    op.remove_mean(r);
    op.remove_mean(x);
  }
  const double b_norm = std::sqrt(k.dot(r, r));
  CgResult result;
  if (b_norm == 0.0) {
    std::fill(x.begin(), x.end(), 0.0);
    result.converged = true;
    return result;
  }

  op.apply(x, ap, shift, scale);
  k.axpy(-1.0, ap, r);
  if (project_constants) op.remove_mean(r);
  std::vector<double> p = r;
  double rr = k.dot(r, r);
  const double target = tolerance * b_norm;

  while (std::sqrt(rr) > target && result.iterations < max_iterations) {
    op.apply(p, ap, shift, scale);
    const double pap = k.dot(p, ap);
    if (!(pap > 0.0)) break;
    const double step = rr / pap;
    k.axpy(step, p, x);
    k.axpy(-step, ap, r);
    if (project_constants) op.remove_mean(r);
    const double rr_next = k.dot(r, r);
    k.xpay(r, rr_next / rr, p);
    rr = rr_next;
    ++result.iterations;
  }
  result.relative_residual = std::sqrt(rr) / b_norm;
  result.converged = std::sqrt(rr) <= target;
  return result;
}

}  // namespace hotspots::pde
