#include "signrank/random.hpp"

#include <gtest/gtest.h>

using namespace signrank;

TEST(Matrix, ProductTransposeBlock) {
  const RationalMatrix a{{1, 2}, {3, 4}};
  const RationalMatrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (RationalMatrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), (RationalMatrix{{1, 3}, {2, 4}}));
  EXPECT_EQ(a.block(1, 0, 1, 2), (RationalMatrix{{3, 4}}));
  EXPECT_EQ(a * RationalVector({1, -1}), RationalVector({-1, -1}));
}

TEST(Matrix, RankExamples) {
  EXPECT_EQ(rank(RationalMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(RationalMatrix::identity(4)), 4u);
  EXPECT_EQ(rank(RationalMatrix(3, 2)), 0u);
  EXPECT_EQ(rank(RationalMatrix{{1, 1, 0}, {0, 1, 1}, {1, 2, 1}}), 2u);
}

TEST(Matrix, RrefProperties) {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto m = random_rational_matrix(rng, 1 + t % 5, 1 + (t / 5) % 5);
    const auto e = rref(m);
    // Pivot columns are unit vectors; rows below the rank are zero.
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      for (std::size_t i = 0; i < m.rows(); ++i) ASSERT_EQ(e.reduced(i, e.pivots[r]), Rational(i == r ? 1 : 0));
    for (std::size_t i = e.pivots.size(); i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) ASSERT_TRUE(e.reduced(i, j).is_zero());
    ASSERT_EQ(rank(m), rank(m.transpose()));
    // Same row space.
    ASSERT_TRUE(RationalSubspace::column_space(m.transpose())
                    .same_subspace(RationalSubspace::column_space(e.reduced.transpose())));
  }
}

TEST(Matrix, NullspaceAndComplement) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + t % 4, cols = 1 + (t / 4) % 6;
    const auto m = random_integer_matrix(rng, rows, cols, -2, 2);
    const auto ns = nullspace_basis(m);
    ASSERT_EQ(ns.dim() + rank(m), cols);
    ASSERT_TRUE((m * ns.basis()).is_zero());

    const auto l = RationalSubspace::column_space(m.transpose());
    const auto k = orth_complement(l);
    ASSERT_EQ(k.dim() + l.dim(), cols);
    if (l.dim() > 0 && k.dim() > 0) {
      ASSERT_TRUE((l.basis().transpose() * k.basis()).is_zero());
    }
    ASSERT_TRUE(orth_complement(k).same_subspace(l));
  }
}

TEST(Matrix, SubspaceConstruction) {
  EXPECT_THROW(RationalSubspace(RationalMatrix{{1, 2}, {2, 4}}), std::invalid_argument);
  const auto l = RationalSubspace::column_space(RationalMatrix{{1, 2, 3}, {1, 2, 3}});
  EXPECT_EQ(l.dim(), 1u);
  EXPECT_EQ(RationalSubspace::zero(3).dim(), 0u);
  EXPECT_EQ(orth_complement(RationalSubspace::zero(3)).dim(), 3u);
  EXPECT_EQ(orth_complement(RationalSubspace::full(3)).dim(), 0u);
  EXPECT_TRUE(RationalSubspace(RationalMatrix{{1, 0}, {0, 1}, {1, 1}})
                  .same_subspace(RationalSubspace(RationalMatrix{{1, 1}, {1, -1}, {2, 0}})));
}

TEST(Matrix, SchurComplement) {
  const RationalMatrix m{{2, 0, 1}, {0, 1, 1}, {1, 1, 5}};
  // E - B D^{-1} C = 5 - (1/2 + 1) = 7/2
  EXPECT_EQ(schur_complement(m, 2), (RationalMatrix{{Rational(7, 2)}}));
  EXPECT_THROW(schur_complement(RationalMatrix{{0, 1}, {1, 0}}, 1), std::domain_error);
  EXPECT_EQ(schur_complement(m, 0), m);

  // Zero exactly when the rank equals rank(D).
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 3, extra = 1 + (t / 3) % 3;
    const auto u = random_integer_matrix(rng, n + extra, n, -3, 3);
    const auto v = random_integer_matrix(rng, n, n + extra, -3, 3);
    const auto m2 = u * v;
    if (rank(m2.block(0, 0, n, n)) != n) continue;
    ASSERT_TRUE(schur_complement(m2, n).is_zero());
  }
}
