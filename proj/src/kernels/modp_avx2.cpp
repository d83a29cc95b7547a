// Compiled with -mavx2 only; callers reach it through avx2_kernels(), which
// checks the running CPU first.

#include "frobenius/kernels.hpp"

#include <immintrin.h>

namespace frobenius::kernels::avx2 {
namespace {

// x holds exact integers below 2^53. Returns x mod p. floor(x * (1/p)) is
// off by at most one, so a single correction in each direction suffices.
inline __m256d reduce(__m256d x, __m256d vp, __m256d vinv) {
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, vinv));
  __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(q, vp));
  const __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
  r = _mm256_add_pd(r, _mm256_and_pd(neg, vp));
  const __m256d over = _mm256_cmp_pd(r, vp, _CMP_GE_OQ);
  return _mm256_sub_pd(r, _mm256_and_pd(over, vp));
}

inline __m256d load4(const std::uint32_t* src) {
  return _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src)));
}

inline void store4(std::uint32_t* dst, __m256d v) {
  _mm_storeu_si128(reinterpret_cast<__m128i*>(dst), _mm256_cvttpd_epi32(v));
}

}  // namespace

void axpy(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t factor,
          std::uint32_t p) {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vf = _mm256_set1_pd(static_cast<double>(factor));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d x0 = _mm256_add_pd(load4(dst + i), _mm256_mul_pd(vf, load4(src + i)));
    const __m256d x1 = _mm256_add_pd(load4(dst + i + 4), _mm256_mul_pd(vf, load4(src + i + 4)));
    store4(dst + i, reduce(x0, vp, vinv));
    store4(dst + i + 4, reduce(x1, vp, vinv));
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_add_pd(load4(dst + i), _mm256_mul_pd(vf, load4(src + i)));
    store4(dst + i, reduce(x, vp, vinv));
  }
  for (; i < n; ++i) {
    const std::uint64_t t = std::uint64_t{dst[i]} + std::uint64_t{factor} * src[i];
    dst[i] = static_cast<std::uint32_t>(t % p);
  }
}

void scale(std::uint32_t* row, std::size_t n, std::uint32_t factor, std::uint32_t p) {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vf = _mm256_set1_pd(static_cast<double>(factor));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    store4(row + i, reduce(_mm256_mul_pd(vf, load4(row + i)), vp, vinv));
  }
  for (; i < n; ++i) {
    row[i] = static_cast<std::uint32_t>(std::uint64_t{factor} * row[i] % p);
  }
}

}  // namespace frobenius::kernels::avx2
