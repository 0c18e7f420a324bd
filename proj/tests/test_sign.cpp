#include "signrank/extremal.hpp"
#include "signrank/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace signrank;

namespace {

SignVector sv(const char* s) { return SignVector::from_string(s); }

// Largest set of nonzero entries with distinct rows and columns, over all
// injections of rows into columns.
std::size_t brute_term_rank(const SignPattern& a) {
  const bool flip = a.rows() > a.cols();
  const SignPattern p = flip ? a.transpose() : a;
  std::vector<std::size_t> cols(p.cols());
  std::iota(cols.begin(), cols.end(), 0);
  std::size_t best = 0;
  do {
    std::size_t count = 0;
    for (std::size_t i = 0; i < p.rows(); ++i) count += p(i, cols[i]) != Sign::Zero;
    best = std::max(best, count);
  } while (std::next_permutation(cols.begin(), cols.end()));
  return best;
}

}  // namespace

TEST(SignVector, Basics) {
  const auto v = sv("+-0+");
  EXPECT_EQ(v.size(), 4u);
  EXPECT_EQ(v[1], Sign::Minus);
  EXPECT_EQ(v.nonzeros(), 3u);
  EXPECT_EQ(v.negated().to_string(), "-+0-");
  EXPECT_EQ(v.to_string(), "+-0+");
  EXPECT_TRUE(SignVector(3).is_zero());
  EXPECT_THROW(SignVector::from_string("+x"), std::invalid_argument);
  // Canonical order: 0 < + < -, decided at the first differing position.
  EXPECT_LT(sv("0+"), sv("+0"));
  EXPECT_LT(sv("+-"), sv("-0"));
}

TEST(SignVector, Orthogonality) {
  EXPECT_TRUE(orthogonal(sv("+0"), sv("0+")));
  EXPECT_TRUE(orthogonal(sv("++"), sv("+-")));
  EXPECT_FALSE(orthogonal(sv("++"), sv("++")));
  EXPECT_FALSE(orthogonal(sv("+0"), sv("+-")));
  EXPECT_TRUE(orthogonal(sv("000"), sv("+-+")));
  EXPECT_THROW(orthogonal(sv("+"), sv("++")), std::invalid_argument);
}

TEST(SignVector, OrthogonalityMatchesRealVectors) {
  // c ⊥ x iff some real vectors with these signs are orthogonal; checked on a grid.
  for (const auto& c : SignVectorSet::all(3))
    for (const auto& x : SignVectorSet::all(3)) {
      bool real = false;
      const int vals[] = {1, 2, 3};
      for (int a : vals)
        for (int b : vals)
          for (int d : vals) {
            const int mag[] = {a, b, d};
            int s = 0;
            for (std::size_t i = 0; i < 3; ++i) {
              const int ci = c[i] == Sign::Zero ? 0 : c[i] == Sign::Plus ? mag[i] : -mag[i];
              const int xi = x[i] == Sign::Zero ? 0 : x[i] == Sign::Plus ? 1 : -1;
              s += ci * xi;
            }
            real = real || s == 0;
          }
      ASSERT_EQ(orthogonal(c, x), real) << c.to_string() << " " << x.to_string();
    }
}

TEST(SetPerp, Examples) {
  EXPECT_EQ(set_perp(SignVectorSet(2, {sv("++")})).size(), 3u);
  EXPECT_EQ(set_perp(SignVectorSet(3, {sv("+++")})).size(), 13u);
  EXPECT_EQ(set_perp(SignVectorSet(3, {})).size(), 27u);
  const auto perp = set_perp(SignVectorSet(2, {sv("+0")}));
  EXPECT_EQ(perp, SignVectorSet(2, {sv("00"), sv("0+"), sv("0-")}));
}

TEST(SetPerp, MatchesBruteForce) {
  Rng rng(1);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + t % 5;
    std::vector<SignVector> s;
    const auto count = rng.uniform(0, 4);
    for (int i = 0; i < count; ++i) s.push_back(random_pattern(rng, 1, n).row(0));
    const SignVectorSet set(n, s);
    std::vector<SignVector> brute;
    for (const auto& c : SignVectorSet::all(n))
      if (std::all_of(s.begin(), s.end(), [&](const SignVector& x) { return orthogonal(c, x); })) brute.push_back(c);
    ASSERT_EQ(set_perp(set), SignVectorSet(n, brute));
  }
}

TEST(SetPerp, SingleVectorFormula) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& x : SignVectorSet::all(n))
      ASSERT_EQ(set_perp(SignVectorSet(n, {x})).size(), perp_count_formula(n, x.nonzeros()));
}

TEST(SignPattern, Construction) {
  const auto p = SignPattern::from_strings({"++0", "-0+"});
  EXPECT_EQ(p.rows(), 2u);
  EXPECT_EQ(p.cols(), 3u);
  EXPECT_EQ(p(1, 0), Sign::Minus);
  EXPECT_EQ(p.transpose().to_strings(), (std::vector<std::string>{"+-", "+0", "0+"}));
  EXPECT_EQ(p.column(2).to_string(), "0+");
  EXPECT_THROW(SignPattern::from_strings({"++", "+"}), std::invalid_argument);
  EXPECT_EQ(sign_of(RationalMatrix{{1, 0}, {-2, 3}}), SignPattern::from_strings({"+0", "-+"}));
  EXPECT_EQ(direct_sum(SignPattern::from_strings({"+"}), SignPattern::from_strings({"-"})),
            SignPattern::from_strings({"+0", "0-"}));
}

TEST(Condense, Example) {
  const auto a = SignPattern::from_strings({"++0+", "--0-", "0000", "+-0-", "++0+"});
  const auto c = condense(a);
  EXPECT_EQ(c.pattern.rows(), 2u);
  EXPECT_EQ(c.pattern.cols(), 2u);
  EXPECT_EQ(c.row_map[2].sign, Sign::Zero);
  EXPECT_EQ(c.col_map[2].sign, Sign::Zero);
  EXPECT_EQ(c.row_map[1].index, c.row_map[0].index);
  EXPECT_EQ(c.row_map[1].sign, negate(c.row_map[0].sign));
}

TEST(Condense, MapsReconstructPattern) {
  Rng rng(9);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_pattern(rng, 1 + t % 6, 1 + (t / 6) % 6);
    const auto c = condense(a);
    // Every entry is recovered from the condensed pattern through the maps.
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto r = c.row_map[i], k = c.col_map[j];
        const Sign rebuilt = r.sign == Sign::Zero || k.sign == Sign::Zero
                                 ? Sign::Zero
                                 : multiply(multiply(r.sign, k.sign), c.pattern(r.index, k.index));
        ASSERT_EQ(rebuilt, a(i, j));
      }
    // Condensed: no zero, equal or opposite lines.
    const auto p = c.pattern;
    for (int pass = 0; pass < 2; ++pass) {
      const auto q = pass == 0 ? p : p.transpose();
      const auto rows = q.row_vectors();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        ASSERT_FALSE(rows[i].is_zero());
        for (std::size_t k = i + 1; k < rows.size(); ++k) {
          ASSERT_FALSE(rows[i] == rows[k]);
          ASSERT_FALSE(rows[i] == rows[k].negated());
        }
      }
    }
    ASSERT_EQ(condense(p).pattern, p);
  }
}

TEST(MaxRank, Examples) {
  EXPECT_EQ(max_rank(SignPattern::identity(4)), 4u);
  EXPECT_EQ(max_rank(SignPattern::from_strings({"+++", "000"})), 1u);
  EXPECT_EQ(max_rank(SignPattern::from_strings({"+0", "+0", "++"})), 2u);
  EXPECT_EQ(max_rank(SignPattern(3, 3)), 0u);
}

TEST(MaxRank, MatchesBruteForce) {
  Rng rng(21);
  for (int t = 0; t < 400; ++t) {
    const auto a = random_pattern(rng, 1 + t % 6, 1 + (t / 6) % 6);
    const auto m = max_rank_matching(a);
    ASSERT_EQ(m.size(), brute_term_rank(a));
    std::vector<char> ru(a.rows()), cu(a.cols());
    for (auto [i, j] : m) {
      ASSERT_NE(a(i, j), Sign::Zero);
      ASSERT_FALSE(ru[i] || cu[j]);
      ru[i] = cu[j] = 1;
    }
  }
}
