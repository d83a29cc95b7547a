#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// Row kernels for arithmetic in GF(p) on packed uint32 residues.
//
// Every table computes bit-identical results; the SIMD tables are only
// faster. The scalar table is the reference and works for any modulus up to
// kMaxModulus. The SIMD tables reduce through double precision and require
// p < kSimdModulusLimit so that dst + f * src stays below 2^53.

namespace frobenius::kernels {

inline constexpr std::uint32_t kSimdModulusLimit = std::uint32_t{1} << 26;

enum class Isa { Scalar, Avx2, Neon };

const char* isa_name(Isa isa);

struct ModpKernels {
  Isa isa;
  /// dst[i] = (dst[i] + factor * src[i]) mod p. Inputs must be reduced.
  void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
               std::uint32_t factor, std::uint32_t p);
  /// row[i] = (factor * row[i]) mod p.
  void (*scale)(std::uint32_t* row, std::size_t n, std::uint32_t factor,
                std::uint32_t p);
};

const ModpKernels& scalar_kernels();
/// nullptr when not compiled in or not supported by the running CPU.
const ModpKernels* avx2_kernels();
const ModpKernels* neon_kernels();

/// Best table for modulus `p` on this machine. FROBENIUS_ISA=scalar in the
/// environment forces the reference table.
const ModpKernels& select(std::uint32_t p);

inline void axpy(const ModpKernels& k, std::span<std::uint32_t> dst,
                 std::span<const std::uint32_t> src, std::uint32_t factor,
                 std::uint32_t p) {
  k.axpy(dst.data(), src.data(), dst.size(), factor, p);
}

inline void scale(const ModpKernels& k, std::span<std::uint32_t> row,
                  std::uint32_t factor, std::uint32_t p) {
  k.scale(row.data(), row.size(), factor, p);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace frobenius::kernels
