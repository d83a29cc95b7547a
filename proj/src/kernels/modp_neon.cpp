// AArch64 only. Same double-precision reduction as the AVX2 variant, two
// lanes at a time.

#include "frobenius/kernels.hpp"

#include <arm_neon.h>

namespace frobenius::kernels::neon {
namespace {

inline float64x2_t reduce(float64x2_t x, float64x2_t vp, float64x2_t vinv) {
  const float64x2_t q = vrndmq_f64(vmulq_f64(x, vinv));
  float64x2_t r = vsubq_f64(x, vmulq_f64(q, vp));
  r = vbslq_f64(vcltzq_f64(r), vaddq_f64(r, vp), r);
  return vbslq_f64(vcgeq_f64(r, vp), vsubq_f64(r, vp), r);
}

inline float64x2_t load2(const std::uint32_t* src) {
  return vcvtq_f64_u64(vmovl_u32(vld1_u32(src)));
}

inline void store2(std::uint32_t* dst, float64x2_t v) {
  vst1_u32(dst, vmovn_u64(vcvtq_u64_f64(v)));
}

}  // namespace

void axpy(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t factor,
          std::uint32_t p) {
  const float64x2_t vp = vdupq_n_f64(static_cast<double>(p));
  const float64x2_t vinv = vdupq_n_f64(1.0 / static_cast<double>(p));
  const float64x2_t vf = vdupq_n_f64(static_cast<double>(factor));
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vfmaq_f64(load2(dst + i), vf, load2(src + i));
    store2(dst + i, reduce(x, vp, vinv));
  }
  for (; i < n; ++i) {
    const std::uint64_t t = std::uint64_t{dst[i]} + std::uint64_t{factor} * src[i];
    dst[i] = static_cast<std::uint32_t>(t % p);
  }
}

void scale(std::uint32_t* row, std::size_t n, std::uint32_t factor, std::uint32_t p) {
  const float64x2_t vp = vdupq_n_f64(static_cast<double>(p));
  const float64x2_t vinv = vdupq_n_f64(1.0 / static_cast<double>(p));
  const float64x2_t vf = vdupq_n_f64(static_cast<double>(factor));
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2(row + i, reduce(vmulq_f64(vf, load2(row + i)), vp, vinv));
  }
  for (; i < n; ++i) {
    row[i] = static_cast<std::uint32_t>(std::uint64_t{factor} * row[i] % p);
  }
}

}  // namespace frobenius::kernels::neon
