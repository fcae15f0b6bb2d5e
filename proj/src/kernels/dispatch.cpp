#include <cstdlib>
#include <string_view>

#include "hotspots/kernels.hpp"
#include "kernels_impl.hpp"

namespace hotspots::simd {

namespace {

namespace d = detail;

template <auto Stencil>
void stencil_adapter(const StencilArgs& a) {
  Stencil(d::RawStencil{a.x.data(), a.y.data(), a.diag.data(), a.mask.data(), a.stride, a.begin, a.end,
                        a.scale, a.shift});
}

template <auto Dot>
double dot_adapter(std::span<const double> x, std::span<const double> y) {
  return Dot(x.data(), y.data(), x.size());
}

template <auto Axpy>
void axpy_adapter(double a, std::span<const double> x, std::span<double> y) {
  Axpy(a, x.data(), y.data(), x.size());
}

template <auto Xpay>
void xpay_adapter(std::span<const double> x, double b, std::span<double> y) {
  Xpay(x.data(), b, y.data(), x.size());
}

template <auto Sum>
double sum_adapter(std::span<const double> x) {
  return Sum(x.data(), x.size());
}

constexpr KernelTable kScalar{
    Isa::scalar,
    "scalar",
    stencil_adapter<d::scalar::stencil>,
    dot_adapter<d::scalar::dot>,
    axpy_adapter<d::scalar::axpy>,
    xpay_adapter<d::scalar::xpay>,
    sum_adapter<d::scalar::sum>,
};

#if defined(HOTSPOTS_HAVE_AVX2)
constexpr KernelTable kAvx2{
    Isa::avx2,
    "avx2",
    stencil_adapter<d::avx2::stencil>,
    dot_adapter<d::avx2::dot>,
    axpy_adapter<d::avx2::axpy>,
    xpay_adapter<d::avx2::xpay>,
    sum_adapter<d::avx2::sum>,
};
#endif

bool cpu_has_avx2() {
#if defined(HOTSPOTS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& select() {
  if (const char* forced = std::getenv("HOTSPOTS_SIMD"); forced && std::string_view(forced) == "scalar") {
    return kScalar;
  }
  if (const KernelTable* fast = avx2_kernels()) return *fast;
  return kScalar;
}

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable* avx2_kernels() {
#if defined(HOTSPOTS_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace hotspots::simd
