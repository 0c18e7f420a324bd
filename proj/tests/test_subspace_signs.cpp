#include "signrank/random.hpp"
#include "signrank/subspace_signs.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace signrank;

namespace {

// Signs of basis * c for every integer coefficient vector c in [-r, r]^k.
std::set<SignVector> grid_signs(const RationalSubspace& l, int r) {
  std::set<SignVector> out;
  const std::size_t k = l.dim();
  std::vector<int> c(k, -r);
  RationalVector x(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) x[i] = c[i];
    out.insert(sign_of(l.basis() * x));
    std::size_t i = 0;
    while (i < k && c[i] == r) c[i++] = -r;
    if (i == k) break;
    ++c[i];
  }
  return out;
}

}  // namespace

TEST(SubspaceSigns, Examples) {
  const auto line = RationalSubspace(RationalMatrix{{1}, {0}, {0}});
  EXPECT_EQ(sign_vectors(line).signs.size(), 3u);
  const auto diag = RationalSubspace(RationalMatrix{{1}, {-1}});
  EXPECT_EQ(sign_vectors(diag).signs, SignVectorSet(2, {SignVector::from_string("00"), SignVector::from_string("+-"),
                                                       SignVector::from_string("-+")}));
  EXPECT_EQ(sign_vectors(RationalSubspace::zero(3)).signs.size(), 1u);
  EXPECT_EQ(sign_vectors(RationalSubspace::full(3)).signs.size(), 27u);
  const auto plane = orth_complement(RationalSubspace(RationalMatrix{{1}, {1}, {1}}));
  EXPECT_EQ(sign_vectors(plane).signs.size(), 13u);
}

TEST(SubspaceSigns, WitnessesAreExact) {
  Rng rng(4);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + t % 4;
    const auto l = random_subspace(rng, n, 1 + t % (n - 1));
    const auto report = sign_vectors(l);
    ASSERT_EQ(report.witnesses.size(), report.signs.size());
    for (const auto& [s, w] : report.witnesses) ASSERT_EQ(sign_of(l.basis() * to_rational(w)), s);
  }
}

TEST(SubspaceSigns, ContainsEverySampledSign) {
  Rng rng(8);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + t % 4;
    const std::size_t k = 1 + t % 2;
    if (k > n) continue;
    const auto l = random_subspace(rng, n, k);
    const auto signs = sign_vectors(l).signs;
    for (const auto& s : grid_signs(l, 4)) ASSERT_TRUE(signs.contains(s)) << s.to_string();
  }
}

TEST(SubspaceSigns, MemberWitness) {
  const auto l = RationalSubspace(RationalMatrix{{1, 0}, {0, 1}, {1, 1}});
  const auto w = member_witness(l, SignVector::from_string("+-0"));
  ASSERT_TRUE(w);
  EXPECT_EQ(sign_of(l.basis() * to_rational(*w)), SignVector::from_string("+-0"));
  EXPECT_FALSE(member_witness(l, SignVector::from_string("++-")));
  EXPECT_THROW(member_witness(l, SignVector::from_string("++")), std::invalid_argument);
}

TEST(Duality, HoldsOnRandomSubspaces) {
  Rng rng(12);
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      for (int t = 0; t < 6; ++t) {
        const auto rep = verify_duality(random_subspace(rng, n, k));
        ASSERT_TRUE(rep.holds) << "n=" << n << " k=" << k;
        ASSERT_TRUE(rep.discrepancy.empty());
      }
}

TEST(Duality, ComplementSignsArePerpendicular) {
  Rng rng(13);
  const auto l = random_subspace(rng, 4, 2);
  const auto a = sign_vectors(l).signs;
  const auto b = sign_vectors(orth_complement(l)).signs;
  for (const auto& x : a)
    for (const auto& y : b) ASSERT_TRUE(orthogonal(x, y));
}

TEST(SameSign, DimensionIsDetermined) {
  const auto l = RationalSubspace(RationalMatrix{{1, 0}, {0, 1}, {1, 1}});
  const auto k = RationalSubspace(RationalMatrix{{2, 0}, {0, 3}, {1, 1}});
  EXPECT_TRUE(same_sign_dim_check(l, k));
  EXPECT_FALSE(same_sign_dim_check(l, RationalSubspace::full(3)));
  EXPECT_FALSE(same_sign_dim_check(l, RationalSubspace(RationalMatrix{{1}, {1}, {1}})));
  EXPECT_THROW(same_sign_dim_check(l, RationalSubspace::full(2)), std::invalid_argument);
}
