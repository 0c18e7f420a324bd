#include "signrank/feasibility.hpp"
#include "signrank/random.hpp"

#include <gtest/gtest.h>

using namespace signrank;

namespace {

bool satisfies(const std::vector<RationalVector>& eq, const std::vector<RationalVector>& pos, const RationalVector& x) {
  for (const auto& a : eq)
    if (!dot(a, x).is_zero()) return false;
  for (const auto& a : pos)
    if (dot(a, x) < Rational(1)) return false;
  return true;
}

// Strict homogeneous solution on the integer grid [-r, r]^k.
bool grid_feasible(const std::vector<RationalVector>& eq, const std::vector<RationalVector>& pos, std::size_t k, int r) {
  RationalVector x(k);
  std::vector<int> v(k, -r);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) x[i] = v[i];
    bool ok = true;
    for (const auto& a : eq) ok = ok && dot(a, x).is_zero();
    for (const auto& a : pos) ok = ok && dot(a, x) > Rational(0);
    if (ok) return true;
    std::size_t i = 0;
    while (i < k && v[i] == r) v[i++] = -r;
    if (i == k) return false;
    ++v[i];
  }
}

}  // namespace

TEST(Feasibility, Examples) {
  const std::vector<RationalVector> none;
  auto x = strict_feasibility(none, {RationalVector{1, 0}, RationalVector{0, 1}}, 2);
  ASSERT_TRUE(x);
  EXPECT_TRUE(satisfies(none, {RationalVector{1, 0}, RationalVector{0, 1}}, *x));

  EXPECT_FALSE(strict_feasibility(none, {RationalVector{1, 0}, RationalVector{-1, 0}}, 2));

  const std::vector<RationalVector> eq{RationalVector{1, -1, 0}};
  const std::vector<RationalVector> pos{RationalVector{1, 0, 0}, RationalVector{0, 0, -1}};
  auto y = strict_feasibility(eq, pos, 3);
  ASSERT_TRUE(y);
  EXPECT_TRUE(satisfies(eq, pos, *y));

  // x1 = 0 and x1 > 0
  EXPECT_FALSE(strict_feasibility({RationalVector{1, 0}}, {RationalVector{1, 0}}, 2));
  EXPECT_THROW(strict_feasibility(none, {RationalVector{1}}, 2), std::invalid_argument);
}

TEST(Feasibility, AgreesWithGridOracle) {
  Rng rng(42);
  int feasible = 0, infeasible = 0;
  for (int t = 0; t < 600; ++t) {
    const std::size_t k = 2 + t % 2;
    std::vector<RationalVector> eq, pos;
    const auto n_eq = static_cast<std::size_t>(rng.uniform(0, 1));
    const auto n_pos = static_cast<std::size_t>(rng.uniform(1, 4));
    for (std::size_t i = 0; i < n_eq; ++i) eq.push_back(random_integer_matrix(rng, 1, k, -2, 2).row(0));
    for (std::size_t i = 0; i < n_pos; ++i) pos.push_back(random_integer_matrix(rng, 1, k, -2, 2).row(0));
    const auto x = strict_feasibility(eq, pos, k);
    if (x) {
      ASSERT_TRUE(satisfies(eq, pos, *x));
      ++feasible;
    } else {
      // Coefficients in [-2, 2] keep every cone vertex on a small grid.
      ASSERT_FALSE(grid_feasible(eq, pos, k, 6));
      ++infeasible;
    }
    if (grid_feasible(eq, pos, k, 3)) {
      ASSERT_TRUE(x);
    }
  }
  EXPECT_GT(feasible, 50);
  EXPECT_GT(infeasible, 50);
}
