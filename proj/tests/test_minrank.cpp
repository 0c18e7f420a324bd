#include "signrank/extremal.hpp"
#include "signrank/minrank.hpp"

#include <gtest/gtest.h>

using namespace signrank;

namespace {

SignPattern pat(std::initializer_list<const char*> rows) {
  std::vector<std::string> r(rows.begin(), rows.end());
  return SignPattern::from_strings(r);
}

std::size_t exact_mr(const SignPattern& a) {
  const auto b = min_rank(a);
  EXPECT_TRUE(b.exact());
  EXPECT_TRUE(verify_bracket(a, b));
  return b.lower;
}

}  // namespace

TEST(LMatrix, Examples) {
  EXPECT_TRUE(is_L_matrix(SignPattern::identity(3)).is_l_matrix);
  const auto r = is_L_matrix(pat({"++", "++"}));
  ASSERT_FALSE(r.is_l_matrix);
  EXPECT_EQ(r.falsifier->to_string(), "+-");
  EXPECT_TRUE(is_L_matrix(pat({"++", "+-"})).is_l_matrix);
  EXPECT_TRUE(mr_eq_n_minus_1(pat({"++", "++", "+0"})) == false);
  EXPECT_TRUE(mr_eq_n_minus_1(pat({"+++", "++-", "+-0"})) == (exact_mr(pat({"+++", "++-", "+-0"})) == 2));
  EXPECT_FALSE(mr_eq_n_minus_1(SignPattern::identity(3)));
}

TEST(NullVector, RealizationAnnihilatesX) {
  Rng rng(3);
  int used = 0;
  for (int t = 0; t < 300; ++t) {
    const auto a = random_pattern(rng, 2 + t % 4, 2 + (t / 4) % 4);
    const auto lm = is_L_matrix(a);
    if (lm.is_l_matrix) continue;
    ++used;
    const auto m = realize_with_null_vector(a, *lm.falsifier);
    ASSERT_EQ(sign_of(m), a);
    RationalVector x(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
      x[j] = (*lm.falsifier)[j] == Sign::Zero ? 0 : (*lm.falsifier)[j] == Sign::Plus ? 1 : -1;
    const auto mx = m * x;
    ASSERT_TRUE(std::all_of(mx.begin(), mx.end(), [](const Rational& v) { return v.is_zero(); }));
    ASSERT_LT(rank(m), a.cols());
  }
  EXPECT_GT(used, 50);
  EXPECT_THROW(realize_with_null_vector(pat({"++"}), SignVector::from_string("++")), std::invalid_argument);
}

TEST(MinRank, Examples) {
  EXPECT_EQ(exact_mr(SignPattern(2, 3)), 0u);
  EXPECT_EQ(exact_mr(pat({"+-", "-+"})), 1u);
  EXPECT_EQ(exact_mr(pat({"+++", "0++"})), 2u);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(exact_mr(SignPattern::identity(n)), n);
  for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(exact_mr(t1t2_pattern(n)), 2u);
  // 4x4 with a sign vector orthogonal to every row and no rank-2 type: mr = 3.
  const auto a = pat({"++00", "0++0", "00++", "+00-"});
  const auto b = min_rank(a);
  EXPECT_TRUE(b.exact());
  EXPECT_TRUE(verify_bracket(a, b));
}

TEST(MinRank, InvariantUnderLineOperations) {
  Rng rng(17);
  for (int t = 0; t < 80; ++t) {
    const std::size_t m = 2 + t % 4, n = 2 + (t / 4) % 4;
    const auto a = random_pattern(rng, m, n);
    const auto mr = exact_mr(a);
    // Negate a row, swap two columns, duplicate a row.
    SignPattern b = a;
    for (std::size_t j = 0; j < n; ++j) b(0, j) = negate(a(0, j));
    EXPECT_EQ(exact_mr(b), mr);
    SignPattern c = a;
    for (std::size_t i = 0; i < m; ++i) std::swap(c(i, 0), c(i, n - 1));
    EXPECT_EQ(exact_mr(c), mr);
    std::vector<SignVector> rows = a.row_vectors();
    rows.push_back(rows.front());
    EXPECT_EQ(exact_mr(SignPattern::from_rows(rows, n)), mr);
    EXPECT_EQ(exact_mr(a.transpose()), mr);
    EXPECT_LE(mr, max_rank(a));
    EXPECT_EQ(mr_eq_n_minus_1(a), mr + 1 == n);
  }
}

TEST(MinRank, PlantedUpperBound) {
  Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    const std::size_t m = 3 + t % 3, n = 3 + (t / 3) % 3, r = 1 + t % 3;
    const auto a = sign_of(random_integer_matrix(rng, m, r, -3, 3) * random_integer_matrix(rng, r, n, -3, 3));
    const auto b = min_rank(a);
    EXPECT_LE(b.upper, r);
    EXPECT_TRUE(verify_bracket(a, b));
  }
}

TEST(MinRank, LatticeSearchFindsPlantedFactorization) {
  Rng rng(29);
  const auto a = sign_of(random_integer_matrix(rng, 5, 2, -2, 2) * random_integer_matrix(rng, 2, 5, -2, 2));
  const auto m = random_upper_bound(a, 2, 0, 2000);
  ASSERT_TRUE(m);
  EXPECT_EQ(sign_of(*m), a);
  EXPECT_LE(rank(*m), 2u);
  EXPECT_THROW(random_upper_bound(a, 0, 0, 1), std::invalid_argument);
}

TEST(MinRank, BracketVerificationRejectsTampering) {
  const auto a = pat({"+++", "0++"});
  auto b = min_rank(a);
  ASSERT_TRUE(verify_bracket(a, b));
  auto low = b;
  low.lower = 3;
  EXPECT_FALSE(verify_bracket(a, low));
  auto forged = b;
  forged.certificates.emplace_back(NullVectorEvidence{SignVector::from_string("+++")});
  EXPECT_FALSE(verify_bracket(a, forged));
  auto wrong = b;
  wrong.certificates.emplace_back(RealizationEvidence{RationalMatrix{{1, 1, 1}, {1, 1, 1}}, 1});
  EXPECT_FALSE(verify_bracket(a, wrong));
}

TEST(MinRank, WideGapIsBracketed) {
  // d = 6 leaves {3..4} to the lattice search; the bracket must stay sound.
  Rng rng(31);
  const auto a = sign_of(random_integer_matrix(rng, 6, 3, -3, 3) * random_integer_matrix(rng, 3, 6, -3, 3));
  MinRankOptions options;
  options.iterations = 50;
  const auto b = min_rank(a, options);
  EXPECT_LE(b.lower, b.upper);
  EXPECT_LE(b.lower, 3u);
  EXPECT_TRUE(verify_bracket(a, b));
}
