#include "support.hpp"

#include "frobenius/analysis.hpp"
#include "frobenius/error.hpp"

using namespace frobenius;
using namespace frobenius::testing;

namespace {

struct RandomTriple {
  Matrix a, b, c;
};

// Mixes full random factors with rank-deficient products so both verdicts
// turn up often.
RandomTriple random_triple(SplitMix64& rng, const Field& f, std::size_t max_dim) {
  auto dim = [&] { return 1 + rng.below(max_dim); };
  auto mat = [&](std::size_t r, std::size_t c) {
    if (rng.below(3) == 0) {
      const std::size_t inner = rng.below(3);
      return random_matrix(rng, f, r, inner) * random_matrix(rng, f, inner, c);
    }
    return random_matrix(rng, f, r, c);
  };
  const std::size_t m = dim(), n = dim(), p = dim(), q = dim();
  Matrix a = mat(m, n);
  Matrix b = mat(n, p);
  Matrix c = mat(p, q);
  return {std::move(a), std::move(b), std::move(c)};
}

}  // namespace

TEST_CASE("rank_profile examples") {
  const Example1 ex;
  const RankProfile rp = rank_profile(ex.a, ex.b, ex.c);
  CHECK(rp.rank_b == 2);
  CHECK(rp.rank_ab == 1);
  CHECK(rp.rank_bc == 2);
  CHECK(rp.rank_abc == 1);
  CHECK(rp.gap == 0);
  CHECK(rp.lhs() == 3);
  CHECK(rp.rhs() == 3);

  for (const Field& f : {Q(), GF(2)}) {
    const Triple t = strict_fixture(f);
    // ABC = diag(1, 0) computed directly.
    CHECK(t.a * t.b * t.c == Matrix::from_ints(f, {{1, 0}, {0, 0}}));
    CHECK(rank_profile(t.a, t.b, t.c) == RankProfile{2, 1, 1, 1, 1});
  }

  const Matrix id = Matrix::identity(Q(), 2);
  CHECK(rank_profile(id, id, id) == RankProfile{2, 2, 2, 2, 0});

  CHECK_THROWS_AS(rank_profile(ex.b, ex.b, ex.c), Error);
  CHECK_THROWS_AS(rank_profile(ex.a, ex.b, Matrix::identity(GF(2), 3)), Error);
}

TEST_CASE("intersection_basis examples") {
  const Example1 ex;
  CHECK(intersection_basis(ex.a, ex.b) == Matrix::column_vector(Q(), {-1, 1}));
  CHECK(intersection_basis(Matrix(Q(), 3, 2), ex.b) == Matrix::from_ints(Q(), {{1, 2}, {0, 1}}));
  CHECK(intersection_basis(Matrix::identity(Q(), 2), ex.b) == Matrix(Q(), 2, 0));
  CHECK(intersection_basis(ex.a, Matrix(Q(), 2, 3)) == Matrix(Q(), 2, 0));
  CHECK_THROWS_AS(intersection_basis(ex.b, ex.b), Error);
}

TEST_CASE("quotient_map_matrix examples") {
  const Example1 ex;
  CHECK(quotient_map_matrix(ex.a, ex.b, ex.c) == Matrix(Q(), 0, 0));

  const Triple t = strict_fixture(Q());
  const Matrix block = quotient_map_matrix(t.a, t.b, t.c);
  CHECK(block.rows() == 0);
  CHECK(block.cols() == 1);

  const Matrix b = Matrix::identity(Q(), 3);
  const Matrix c = Matrix::column_vector(Q(), {1, 0, 0});
  CHECK(quotient_map_matrix(Matrix::identity(Q(), 3), b, c) == Matrix::identity(Q(), 2));

  // A kills e1 and shifts e2, e3: B = I3, C = e3 gives domain basis
  // [e3 | e1, e2] and codomain basis [(0,1) | (1,0)], so the block holds the
  // coordinates of A e1 = 0 and A e2 = (1, 0) on (1, 0).
  const Matrix shift = Matrix::from_ints(Q(), {{0, 1, 0}, {0, 0, 1}});
  const Matrix e3 = Matrix::column_vector(Q(), {0, 0, 1});
  CHECK(quotient_map_matrix(shift, Matrix::identity(Q(), 3), e3) == Matrix::from_ints(Q(), {{0, 1}}));
}

TEST_CASE("equality_criteria examples") {
  const Example1 ex;
  const CriteriaReport rep = equality_criteria(ex.a, ex.b, ex.c);
  CHECK(rep.gap_zero);
  CHECK(rep.quotient_block_invertible);
  CHECK(rep.intersections_equal);
  CHECK(rep.factor_exists);
  CHECK_FALSE(rep.witness);
  // D_BC V_BC = BC (1/2, 1) = (1, -1) and D_B V_B = (-1, 1), so Z = [-1].
  const Matrix w_bc = intersection_basis(ex.a, ex.b * ex.c);
  CHECK(w_bc == Matrix::column_vector(Q(), {1, -1}));
  REQUIRE(rep.factor);
  CHECK(*rep.factor == Matrix::from_ints(Q(), {{-1}}));
  CHECK(w_bc * *rep.factor == intersection_basis(ex.a, ex.b));

  for (const Field& f : {Q(), GF(2), GF(3)}) {
    const Triple t = strict_fixture(f);
    const CriteriaReport s = equality_criteria(t.a, t.b, t.c);
    CHECK_FALSE(s.gap_zero);
    CHECK_FALSE(s.quotient_block_invertible);
    CHECK_FALSE(s.intersections_equal);
    CHECK_FALSE(s.factor_exists);
    CHECK_FALSE(s.factor);
    REQUIRE(s.witness);
    CHECK(s.witness->vector == Matrix::column_vector(f, {0, 1}));
  }

  const CriteriaReport z = equality_criteria(ex.a, Matrix(Q(), 2, 3), ex.c);
  CHECK(z.gap_zero);
  CHECK(z.quotient_block_invertible);
  CHECK(z.intersections_equal);
  CHECK(z.factor_exists);
}

TEST_CASE("analysis properties over random triples") {
  SplitMix64 rng(31337);
  for (const Field& f : {Q(), GF(2), GF(3), GF(5)}) {
    CAPTURE(f.name());
    int equal = 0;
    int strict = 0;
    for (int rep = 0; rep < 200; ++rep) {
      const auto [a, b, c] = random_triple(rng, f, 4);
      CAPTURE(a);
      CAPTURE(b);
      CAPTURE(c);
      const RankProfile rp = rank_profile(a, b, c);
      CHECK(rp.lhs() >= rp.rhs());
      CHECK(rp.rank_bc <= rp.rank_b);
      CHECK(rp.rank_abc <= rp.rank_ab);
      CHECK(rp.rank_abc <= rp.rank_bc);
      CHECK(rp.rank_ab <= rp.rank_b);

      const Matrix bc = b * c;
      const Matrix w_b = intersection_basis(a, b);
      const Matrix w_bc = intersection_basis(a, bc);
      // rank(AB) = rank(B) - dim(Rg(B) ∩ Ker(A)), for B and for BC.
      CHECK(rp.rank_ab == rp.rank_b - w_b.cols());
      CHECK(rp.rank_abc == rp.rank_bc - w_bc.cols());
      CHECK((a * w_b).is_zero());
      CHECK(rank(hconcat(b, w_b)) == rp.rank_b);
      CHECK(rank(w_b) == w_b.cols());

      const Matrix block = quotient_map_matrix(a, b, c);
      CHECK(block.rows() == rp.rank_ab - rp.rank_abc);
      CHECK(block.cols() == rp.rank_b - rp.rank_bc);
      CHECK((block.rows() == block.cols() && rank(block) == block.rows()) == (rp.gap == 0));

      const CriteriaReport cr = equality_criteria(a, b, c);  // throws on disagreement
      CHECK(cr.gap_zero == (rp.gap == 0));
      CHECK(cr.quotient_block_invertible == cr.gap_zero);
      CHECK(cr.intersections_equal == cr.gap_zero);
      CHECK(cr.factor_exists == cr.gap_zero);
      CHECK(cr.factor.has_value() == cr.factor_exists);
      CHECK(cr.witness.has_value() == !cr.gap_zero);
      if (cr.factor) CHECK(w_bc * *cr.factor == w_b);
      if (cr.witness) {
        const Matrix& w = cr.witness->vector;
        CHECK((a * w).is_zero());
        CHECK(rank(hconcat(b, w)) == rp.rank_b);
        CHECK(rank(hconcat(w_bc, w)) == w_bc.cols() + 1);
        ++strict;
      } else {
        ++equal;
      }
    }
    CHECK(equal > 0);
    CHECK(strict > 0);
  }
}
