#include "frobenius/oracle.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "frobenius/analysis.hpp"
#include "frobenius/error.hpp"
#include "frobenius/kernels.hpp"

namespace frobenius {
namespace {

// Advances `digits` to the next base-p numeral, last digit fastest. Returns
// false after wrapping around to all zeros.
bool increment(std::vector<std::uint32_t>& digits, std::uint32_t p) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < p) return true;
    digits[i] = 0;
  }
  return false;
}

// out (rows x cols) = lhs (rows x inner) * rhs (inner x cols), all mod p.
void multiply(std::span<std::uint32_t> out, std::span<const std::uint32_t> lhs,
              std::span<const std::uint32_t> rhs, std::size_t rows, std::size_t inner,
              std::size_t cols, std::uint32_t p, const kernels::ModpKernels& k) {
  std::fill(out.begin(), out.end(), 0u);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t t = 0; t < inner; ++t) {
      const std::uint32_t f = lhs[i * inner + t];
      if (f != 0) k.axpy(out.data() + i * cols, rhs.data() + t * cols, cols, f, p);
    }
  }
}

}  // namespace

std::uint64_t candidate_count(const Matrix& a, const Matrix& b, const Matrix& c) {
  require_chain(a, b, c);
  if (!b.field().is_prime_field()) {
    throw Error(ErrorCode::NotFiniteField, "enumeration needs GF(p)");
  }
  const std::uint64_t p = b.field().modulus();
  const std::size_t exponent = c.cols() * b.cols() + b.rows() * a.rows();
  std::uint64_t total = 1;
  for (std::size_t e = 0; e < exponent; ++e) {
    if (total > std::numeric_limits<std::uint64_t>::max() / p) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= p;
  }
  return total;
}

bool brute_force_solvable(const Matrix& a, const Matrix& b, const Matrix& c,
                          std::uint64_t budget) {
  const std::uint64_t total = candidate_count(a, b, c);
  if (total > budget) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(total) + " candidate pairs exceed budget " +
                                               std::to_string(budget));
  }
  const std::uint32_t p = b.field().modulus();
  const auto& k = kernels::select(p);
  const std::size_t m = a.rows();
  const std::size_t n = b.rows();
  const std::size_t pd = b.cols();
  const std::size_t q = c.cols();
  const Matrix ab = a * b;
  const Matrix bc = b * c;

  std::vector<std::uint32_t> x(q * pd, 0);
  std::vector<std::uint32_t> y(n * m, 0);
  std::vector<std::uint32_t> target(n * pd);
  std::vector<std::uint32_t> bcx(n * pd);
  std::vector<std::uint32_t> yab(n * pd);
  const auto b_data = b.residue_data();

  do {
    // target = B - BC X
    multiply(bcx, bc.residue_data(), x, n, q, pd, p, k);
    std::copy(b_data.begin(), b_data.end(), target.begin());
    k.axpy(target.data(), bcx.data(), target.size(), p - 1, p);
    std::fill(y.begin(), y.end(), 0u);
    do {
      multiply(yab, y, ab.residue_data(), n, m, pd, p, k);
      if (yab == target) return true;
    } while (increment(y, p));
  } while (increment(x, p));
  return false;
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // 2^64 mod bound; the draws at or above it split evenly into residues.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t draw = next();
  while (draw < threshold) draw = next();
  return draw % bound;
}

Triple random_instance(const InstanceSpec& spec) {
  const auto [m, n, p, q] = spec.dims;
  if (m == 0 || n == 0 || p == 0 || q == 0) {
    throw Error(ErrorCode::DimensionMismatch, "generated dimensions must be positive");
  }
  if (spec.pool.numerator_bound < 0 || spec.pool.denominator_bound < 1) {
    throw Error(ErrorCode::ScalarError, "empty rational entry pool");
  }
  const Field& field = spec.field;
  SplitMix64 rng(spec.seed);
  auto draw = [&]() {
    if (field.is_prime_field()) return Scalar::from_residue(field, rng.below(field.modulus()));
    const long nb = spec.pool.numerator_bound;
    const long num = static_cast<long>(rng.below(static_cast<std::uint64_t>(2 * nb + 1))) - nb;
    const long den =
        static_cast<long>(rng.below(static_cast<std::uint64_t>(spec.pool.denominator_bound))) + 1;
    return Scalar::from_rational(field, mpq_class(num, den));
  };
  auto fill = [&](std::size_t rows, std::size_t cols) {
    Matrix out(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) out.set(i, j, draw());
    }
    return out;
  };
  Matrix a = fill(m, n);
  Matrix b = fill(n, p);
  Matrix c = fill(p, q);
  return Triple{std::move(a), std::move(b), std::move(c)};
}

}  // namespace frobenius
