#include "signrank/random.hpp"
#include "signrank/realize.hpp"

#include <gtest/gtest.h>

using namespace signrank;

namespace {

SignPattern pat(std::initializer_list<const char*> rows) {
  std::vector<std::string> r(rows.begin(), rows.end());
  return SignPattern::from_strings(r);
}

}  // namespace

TEST(RealizeCorank2, CoordinatePlaneColumns) {
  // Columns (+,+,0,0), (+,-,0,0), 0 in R^4.
  const auto a = pat({"++0", "+-0", "000", "000"});
  const auto out = realize_corank2(a);
  ASSERT_TRUE(out.result);
  EXPECT_EQ(sign_of(out.result->matrix), a);
  EXPECT_LE(out.result->claimed_rank, 2u);
  EXPECT_EQ(out.result->complement.dim(), 2u);
}

TEST(RealizeCorank2, IdentityHasNone) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto out = realize_corank2(SignPattern::identity(n));
    EXPECT_FALSE(out.result);
    EXPECT_EQ(out.status, SearchStatus::Exhausted);
  }
}

TEST(RealizeCorank2, PlantedInstancesAndTrace) {
  Rng rng(19);
  for (int t = 0; t < 15; ++t) {
    const std::size_t n = 3 + t % 4, m = 2 + t % 7;
    const auto a = sign_of(random_rational_matrix(rng, n, n - 2) * random_rational_matrix(rng, n - 2, m));
    const auto out = realize_corank2(a);
    ASSERT_TRUE(out.result);
    const auto& r = *out.result;
    ASSERT_EQ(sign_of(r.matrix), a);
    ASSERT_LE(rank(r.matrix), n - 2);
    ASSERT_EQ(r.plane.dim(), 2u);
    ASSERT_EQ(r.complement.dim(), n - 2);
    ASSERT_EQ(sign_vectors(r.complement).signs, set_perp(sign_set_of_type(r.type)));
    for (std::size_t j = 0; j < a.cols(); ++j)
      ASSERT_EQ(sign_of(r.complement.basis() * to_rational(r.column_witnesses[j])), a.column(j));
  }
}

TEST(Rationalize, AllPositive) {
  const auto out = rationalize_equation(pat({"+", "+"}), pat({"++"}), pat({"++", "++"}));
  ASSERT_TRUE(out.solution);
  const auto& s = *out.solution;
  EXPECT_EQ(s.b * s.c, s.e);
  EXPECT_EQ(sign_of(s.e), pat({"++", "++"}));
}

TEST(Rationalize, PlantedWithZeros) {
  const auto sb = sign_of(RationalMatrix{{1, 1}, {1, -1}});
  const auto sc = sign_of(RationalMatrix{{1, 1}, {-1, 1}});
  const auto se = pat({"0+", "+0"});
  const auto out = rationalize_equation(sb, sc, se);
  ASSERT_TRUE(out.solution);
  const auto& s = *out.solution;
  EXPECT_EQ(s.b * s.c, s.e);
  EXPECT_EQ(sign_of(s.b), sb);
  EXPECT_EQ(sign_of(s.c), sc);
  EXPECT_EQ(sign_of(s.e), se);
  // Leading block of the intermediate realization is positive diagonal.
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(sign_of(s.block(i, j)), i == j ? Sign::Plus : Sign::Zero);
}

TEST(Rationalize, InfeasibleIsDefinitive) {
  const auto out = rationalize_equation(pat({"+"}), pat({"++"}), pat({"0+"}));
  EXPECT_FALSE(out.solution);
  EXPECT_EQ(out.status, SearchStatus::Exhausted);
}

TEST(Rationalize, TwoRowsMatchesTransposedCase) {
  Rng rng(37);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 1 + t % 3, q = t % 2 == 0 ? 1 : 3;
    const auto b = random_integer_matrix(rng, 2, n, -2, 2);
    const auto c = random_integer_matrix(rng, n, q, -2, 2);
    const auto sb = sign_of(b), sc = sign_of(c), se = sign_of(b * c);
    const auto rows = rationalize_equation(sb, sc, se);
    const auto cols = rationalize_equation(sc.transpose(), sb.transpose(), se.transpose());
    ASSERT_TRUE(rows.solution);
    ASSERT_TRUE(cols.solution);
    EXPECT_EQ(rows.solution->b, cols.solution->c.transpose());
    EXPECT_EQ(rows.solution->c, cols.solution->b.transpose());
    EXPECT_EQ(rows.solution->e, cols.solution->e.transpose());
    EXPECT_EQ(rows.solution->b * rows.solution->c, rows.solution->e);
  }
}

TEST(Rationalize, DimensionErrors) {
  EXPECT_THROW(rationalize_equation(pat({"++"}), pat({"++"}), pat({"++"})), std::invalid_argument);
  EXPECT_THROW(rationalize_equation(pat({"+", "+", "+"}), pat({"+++"}), pat({"+++", "+++", "+++"})),
               std::invalid_argument);
}
