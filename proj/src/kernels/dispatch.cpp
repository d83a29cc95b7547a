#include <cstdlib>
#include <cstring>

#include "frobenius/kernels.hpp"

namespace frobenius::kernels {

#if defined(FROBENIUS_HAVE_AVX2)
namespace avx2 {
void axpy(std::uint32_t*, const std::uint32_t*, std::size_t, std::uint32_t, std::uint32_t);
void scale(std::uint32_t*, std::size_t, std::uint32_t, std::uint32_t);
}  // namespace avx2
#endif

#if defined(FROBENIUS_HAVE_NEON)
namespace neon {
void axpy(std::uint32_t*, const std::uint32_t*, std::size_t, std::uint32_t, std::uint32_t);
void scale(std::uint32_t*, std::size_t, std::uint32_t, std::uint32_t);
}  // namespace neon
#endif

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

const ModpKernels* avx2_kernels() {
#if defined(FROBENIUS_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  static constexpr ModpKernels table{Isa::Avx2, avx2::axpy, avx2::scale};
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const ModpKernels* neon_kernels() {
#if defined(FROBENIUS_HAVE_NEON)
  // Advanced SIMD is mandatory on AArch64.
  static constexpr ModpKernels table{Isa::Neon, neon::axpy, neon::scale};
  return &table;
#else
  return nullptr;
#endif
}

namespace {

const ModpKernels* best_simd() {
  static const ModpKernels* best = [] {
    const char* forced = std::getenv("FROBENIUS_ISA");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) {
      return static_cast<const ModpKernels*>(nullptr);
    }
    if (const ModpKernels* k = avx2_kernels()) return k;
    return neon_kernels();
  }();
  return best;
}

}  // namespace

const ModpKernels& select(std::uint32_t p) {
  const ModpKernels* simd = best_simd();
  if (simd != nullptr && p < kSimdModulusLimit) return *simd;
  return scalar_kernels();
}

}  // namespace frobenius::kernels
