#include "support.hpp"

#include <vector>

#include "frobenius/kernels.hpp"

using namespace frobenius;
using namespace frobenius::testing;

namespace {

std::vector<const kernels::ModpKernels*> simd_tables() {
  std::vector<const kernels::ModpKernels*> out;
  if (auto* k = kernels::avx2_kernels()) out.push_back(k);
  if (auto* k = kernels::neon_kernels()) out.push_back(k);
  return out;
}

std::vector<std::uint32_t> random_row(SplitMix64& rng, std::size_t n, std::uint32_t p) {
  std::vector<std::uint32_t> row(n);
  for (auto& v : row) v = static_cast<std::uint32_t>(rng.below(p));
  return row;
}

// Residues that stress the reduction: 0, 1, p-1 and p-2 mixed with random ones.
void salt_extremes(std::vector<std::uint32_t>& row, std::uint32_t p) {
  const std::uint32_t extremes[] = {0, 1, p - 1, p > 2 ? p - 2 : 0};
  for (std::size_t i = 0; i < row.size(); i += 3) row[i] = extremes[(i / 3) % 4];
}

constexpr std::uint32_t kPrimes[] = {2, 3, 5, 7, 251, 65521, 1000003, 16777213, 67108859};

}  // namespace

TEST_CASE("scalar reference kernel against direct arithmetic") {
  const auto& k = kernels::scalar_kernels();
  std::vector<std::uint32_t> dst = {0, 1, 2, 3, 4};
  const std::vector<std::uint32_t> src = {4, 4, 4, 4, 4};
  k.axpy(dst.data(), src.data(), dst.size(), 3, 5);
  CHECK(dst == std::vector<std::uint32_t>{2, 3, 4, 0, 1});
  k.scale(dst.data(), dst.size(), 2, 5);
  CHECK(dst == std::vector<std::uint32_t>{4, 1, 3, 0, 2});

  const std::uint32_t big = 2147483647;
  std::vector<std::uint32_t> d2 = {big - 1};
  const std::vector<std::uint32_t> s2 = {big - 1};
  k.axpy(d2.data(), s2.data(), 1, big - 1, big);  // -1 + (-1)(-1) = 0
  CHECK(d2[0] == 0);
}

TEST_CASE("inverse_mod") {
  for (std::uint32_t p : kPrimes) {
    for (std::uint32_t a : {1u, 2u % p, p - 1}) {
      if (a == 0) continue;
      CHECK(std::uint64_t{a} * kernels::inverse_mod(a, p) % p == 1);
    }
  }
}

TEST_CASE("SIMD kernels match the scalar reference bit for bit") {
  const auto tables = simd_tables();
  if (tables.empty()) {
    MESSAGE("no SIMD kernels on this machine; equivalence is vacuous");
    return;
  }
  SplitMix64 rng(0x5eed);
  const auto& ref = kernels::scalar_kernels();
  for (const auto* simd : tables) {
    CAPTURE(kernels::isa_name(simd->isa));
    for (std::uint32_t p : kPrimes) {
      CAPTURE(p);
      for (std::size_t n = 0; n <= 37; ++n) {
        for (int rep = 0; rep < 4; ++rep) {
          auto dst = random_row(rng, n, p);
          const auto src = random_row(rng, n, p);
          if (rep % 2 == 1) salt_extremes(dst, p);
          const auto factor = static_cast<std::uint32_t>(rep == 3 ? p - 1 : rng.below(p));
          auto expect = dst;
          auto got = dst;
          ref.axpy(expect.data(), src.data(), n, factor, p);
          simd->axpy(got.data(), src.data(), n, factor, p);
          REQUIRE(got == expect);
          ref.scale(expect.data(), n, factor, p);
          simd->scale(got.data(), n, factor, p);
          REQUIRE(got == expect);
        }
      }
    }
  }
}

TEST_CASE("dispatch honours the SIMD modulus limit") {
  CHECK(kernels::select(kernels::kSimdModulusLimit).isa == kernels::Isa::Scalar);
  CHECK(kernels::select(2147483647).isa == kernels::Isa::Scalar);
  if (kernels::avx2_kernels() != nullptr && std::getenv("FROBENIUS_ISA") == nullptr) {
    CHECK(kernels::select(5).isa == kernels::Isa::Avx2);
  }
}

TEST_CASE("rref is identical under every kernel table") {
  SplitMix64 rng(99);
  const auto tables = simd_tables();
  for (std::uint32_t p : {2u, 3u, 5u, 65521u, 67108859u}) {
    const Field f = GF(p);
    for (int rep = 0; rep < 60; ++rep) {
      const std::size_t rows = rng.below(7);
      const std::size_t cols = rng.below(12);
      Matrix m = random_matrix(rng, f, rows, cols);
      // Duplicate a row now and then so rank deficiency is exercised.
      if (rows >= 2 && rep % 3 == 0) {
        for (std::size_t j = 0; j < cols; ++j) m.set(rows - 1, j, m.at(0, j));
      }
      const RrefResult expect = rref(m, kernels::scalar_kernels());
      for (const auto* simd : tables) {
        const RrefResult got = rref(m, *simd);
        REQUIRE(got.rref == expect.rref);
        REQUIRE(got.pivot_cols == expect.pivot_cols);
      }
    }
  }
}
