#include "frobenius/kernels.hpp"

namespace frobenius::kernels {
namespace {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                 std::uint32_t factor, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t t = std::uint64_t{dst[i]} + std::uint64_t{factor} * src[i];
    dst[i] = static_cast<std::uint32_t>(t % p);
  }
}

void scale_scalar(std::uint32_t* row, std::size_t n, std::uint32_t factor, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    row[i] = static_cast<std::uint32_t>(std::uint64_t{factor} * row[i] % p);
  }
}

constexpr ModpKernels kScalar{Isa::Scalar, axpy_scalar, scale_scalar};

}  // namespace

const ModpKernels& scalar_kernels() { return kScalar; }

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on signed 64-bit; a is nonzero mod p.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = t - q * new_t;
    std::swap(t, new_t);
    r = r - q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace frobenius::kernels
