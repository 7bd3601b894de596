#include <gtest/gtest.h>

#include <random>

#include "ffyb/matfq.hpp"
#include "ffyb/orbits.hpp"
#include "test_oracles.hpp"

using namespace ffyb;
using ffyb::testing::leibniz_charpoly;
using ffyb::testing::leibniz_det;
using ffyb::testing::random_invertible;
using ffyb::testing::random_matrix;

TEST(Matrix, ParseAndFormat) {
  auto f = make_field(5, 1);
  Matrix m = parse_matrix(f, "0,1;0,3");
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m(1, 1), 3u);
  EXPECT_EQ(m.to_string(), "0,1;0,3");
  EXPECT_THROW(parse_matrix(f, "0,1;0"), InvalidArgument);
  EXPECT_THROW(parse_matrix(f, "0,5;0,1"), InvalidArgument);
  EXPECT_THROW(parse_matrix(f, "0,x;0,1"), InvalidArgument);
  EXPECT_THROW(parse_matrix(f, ""), InvalidArgument);
}

TEST(Matrix, ProductExamples) {
  auto f3 = make_field(3, 1);
  std::mt19937_64 rng(1);
  Matrix x = random_matrix(f3, 3, rng);
  EXPECT_EQ(Matrix::identity(f3, 3) * x, x);

  auto f5 = make_field(5, 1);
  Matrix q = q_block(f5, 1);
  EXPECT_EQ(q * q, parse_matrix(f5, "0,1;0,1"));

  Matrix ai = Matrix::scalar(f3, 3, 2);
  EXPECT_EQ(ai * x, scalar_mul(2u, x));
  EXPECT_EQ(ai * x, x * ai);
}

TEST(Matrix, DimensionAndFieldMismatch) {
  auto f = make_field(3, 1), g = make_field(5, 1);
  EXPECT_THROW(Matrix(f, 2, 3) * Matrix(f, 2, 3), InvalidArgument);
  EXPECT_THROW(Matrix(f, 2, 2) + Matrix(f, 3, 3), InvalidArgument);
  EXPECT_THROW(Matrix(f, 2, 2) * Matrix(g, 2, 2), InvalidArgument);
  EXPECT_THROW(det(Matrix(f, 2, 3)), InvalidArgument);
}

TEST(Matrix, DetRankInverseExamples) {
  for (Elem a : {1u, 2u, 4u}) {
    auto f = make_field(5, 1);
    Matrix q = q_block(f, a);
    EXPECT_TRUE(det(q).is_zero());
    EXPECT_EQ(rank(q), 1u);
  }
  auto f = make_field(3, 2);
  EXPECT_EQ(det(Matrix::identity(f, 4)).value(), 1u);
  EXPECT_EQ(rank(Matrix::zero(f, 4)), 0u);
  EXPECT_THROW(inverse(Matrix::zero(f, 2)), SingularMatrix);
}

TEST(Matrix, DetMatchesLeibnizOnRandomSamples) {
  std::mt19937_64 rng(2);
  for (auto [p, s] : ffyb::testing::small_fields()) {
    auto f = make_field(p, s);
    for (std::size_t n = 1; n <= 4; ++n)
      for (int t = 0; t < 25; ++t) {
        Matrix x = random_matrix(f, n, rng);
        EXPECT_EQ(det(x).value(), leibniz_det(x));
      }
  }
}

TEST(Matrix, InverseExhaustiveOverGL22) {
  auto f = make_field(2, 1);
  std::size_t count = 0;
  for (std::uint64_t idx = 0; idx < 16; ++idx) {
    Matrix x = Matrix::from_index(f, 2, idx);
    if (det(x).is_zero()) continue;
    ++count;
    EXPECT_EQ(inverse(x) * x, Matrix::identity(f, 2));
    EXPECT_EQ(x * inverse(x), Matrix::identity(f, 2));
  }
  EXPECT_EQ(count, 6u);
}

TEST(Charpoly, Examples) {
  auto f = make_field(5, 1);
  for (Elem a = 1; a < 5; ++a) {
    XiVector xi = charpoly_xi(q_block(f, a));
    EXPECT_EQ(xi.values(), (std::vector<Elem>{a, 0}));
  }
  // a*I_n: xi_i = C(n,i) a^i
  auto f7 = make_field(7, 1);
  XiVector xi = charpoly_xi(Matrix::scalar(f7, 4, 3));
  // (4*3, 6*9, 4*27, 81) mod 7
  EXPECT_EQ(xi.values(), (std::vector<Elem>{5, 5, 3, 4}));
  EXPECT_EQ(charpoly_xi(Matrix::zero(f7, 3)).values(), (std::vector<Elem>{0, 0, 0}));
}

TEST(Charpoly, MatchesLeibnizTraceAndDeterminant) {
  std::mt19937_64 rng(3);
  for (auto [p, s] : ffyb::testing::small_fields()) {
    auto f = make_field(p, s);
    for (std::size_t n = 1; n <= 5; ++n)
      for (int t = 0; t < 6; ++t) {
        Matrix x = random_matrix(f, n, rng);
        EXPECT_EQ(charpoly(x), leibniz_charpoly(x));
        XiVector xi = charpoly_xi(x);
        ASSERT_EQ(xi.size(), n);
        Elem tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr = f->add(tr, x(i, i));
        EXPECT_EQ(xi[0].value(), tr);
        EXPECT_EQ(xi[n - 1], det(x));
      }
  }
}

TEST(Charpoly, CayleyHamilton) {
  std::mt19937_64 rng(4);
  for (auto [p, s] : ffyb::testing::small_fields()) {
    auto f = make_field(p, s);
    for (std::size_t n = 1; n <= 5; ++n) {
      Matrix x = random_matrix(f, n, rng);
      EXPECT_TRUE(eval_poly(charpoly(x), x).is_zero());
    }
  }
}

TEST(Charpoly, ConjugationInvariance) {
  std::mt19937_64 rng(5);
  for (auto [p, s] : std::vector<std::pair<std::uint32_t, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto f = make_field(p, s);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 1 + t % 4;
      Matrix x = random_matrix(f, n, rng);
      Matrix pm = random_invertible(f, n, rng);
      EXPECT_EQ(charpoly_xi(conjugate(pm, x)), charpoly_xi(x));
    }
  }
}

TEST(Companion, Examples) {
  auto f = make_field(5, 1);
  // x^2 + 3x + 2
  Matrix c = companion(UniPoly(f, {2, 3, 1}));
  EXPECT_EQ(c, parse_matrix(f, "0,1;3,2"));  // [[0,1],[-a0,-a1]]
  EXPECT_EQ(companion(UniPoly::linear(f, 4)), parse_matrix(f, "4"));
  EXPECT_THROW(companion(UniPoly(f, {1, 2})), InvalidArgument);
  EXPECT_THROW(companion(UniPoly::one(f)), InvalidArgument);
}

TEST(Companion, CharpolyRoundTripForAllMonicCubicsOverF3) {
  auto f = make_field(3, 1);
  detail::for_each_monic(3, 3, [&](const detail::RawPoly& g) {
    UniPoly poly(f, g);
    Matrix c = companion(poly);
    EXPECT_EQ(leibniz_charpoly(c), poly);
    EXPECT_EQ(charpoly(c), poly);
    return false;
  });
}

TEST(DirectSum, BlockProperties) {
  auto f = make_field(3, 1);
  Matrix x = direct_sum(Matrix::zero(f, 1), q_block(f, 2));
  EXPECT_EQ(x, parse_matrix(f, "0,0,0;0,0,1;0,0,2"));
  std::mt19937_64 rng(6);
  for (int t = 0; t < 50; ++t) {
    Matrix b = random_matrix(f, 1 + t % 3, rng), c = random_matrix(f, 1 + (t / 3) % 3, rng);
    Matrix bc = direct_sum(b, c);
    EXPECT_EQ(det(bc), det(b) * det(c));
    EXPECT_EQ(rank(bc), rank(b) + rank(c));
  }
}

TEST(Conjugate, IdentityAndSingular) {
  auto f = make_field(3, 1);
  std::mt19937_64 rng(8);
  Matrix x = random_matrix(f, 3, rng);
  EXPECT_EQ(conjugate(Matrix::identity(f, 3), x), x);
  EXPECT_THROW(conjugate(Matrix::zero(f, 3), x), SingularMatrix);
}

TEST(GlOrder, Values) {
  EXPECT_EQ(gl_order(0, 7), 1);
  EXPECT_EQ(gl_order(2, 2), 6);
  EXPECT_EQ(gl_order(3, 2), 168);
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const BigInt bq = q;
    EXPECT_EQ(gl_order(2, bq), (bq * bq - 1) * (bq * bq - bq));
    EXPECT_EQ(gl_order(1, bq), bq - 1);
  }
  // exhaustive count of invertible 2x2 matrices over F_3
  auto f = make_field(3, 1);
  std::size_t count = 0;
  for (std::uint64_t idx = 0; idx < 81; ++idx)
    if (!det(Matrix::from_index(f, 2, idx)).is_zero()) ++count;
  EXPECT_EQ(BigInt(count), gl_order(2, 3));
}
