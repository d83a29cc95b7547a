#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "frobenius/field.hpp"
#include "frobenius/matrix.hpp"

namespace frobenius {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

/// Number of (X, Y) candidates over GF(p): p^(q*p_dim + n*m), saturated at
/// UINT64_MAX.
std::uint64_t candidate_count(const Matrix& a, const Matrix& b, const Matrix& c);

/// Decides solvability of B = BCX + YAB by enumerating every X (outer loop)
/// and Y (inner loop) in lexicographic order of their row-major entries.
/// Throws NotFiniteField over Q and BudgetExceeded when candidate_count()
/// exceeds `budget`.
bool brute_force_solvable(const Matrix& a, const Matrix& b, const Matrix& c,
                          std::uint64_t budget = kDefaultBudget);

/// SplitMix64 (Steele, Lea, Flood 2014):
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound), bound > 0: draws below 2^64 mod bound are
  /// discarded, then the draw is taken mod bound.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Rational entries are n/d with n uniform in [-numerator_bound,
/// numerator_bound] and d uniform in [1, denominator_bound], numerator drawn
/// first. Prime-field entries are uniform residues. Ignored bounds for GF(p).
struct EntryPool {
  long numerator_bound = 3;
  long denominator_bound = 2;
};

struct InstanceSpec {
  Field field = Field::rationals();
  std::array<std::size_t, 4> dims{1, 1, 1, 1};  // m, n, p, q
  std::uint64_t seed = 0;
  EntryPool pool{};
};

struct Triple {
  Matrix a;
  Matrix b;
  Matrix c;
};

/// Deterministic in `spec`: one SplitMix64 stream seeded with spec.seed fills
/// A (m x n), then B (n x p), then C (p x q), each row-major.
Triple random_instance(const InstanceSpec& spec);

}  // namespace frobenius
