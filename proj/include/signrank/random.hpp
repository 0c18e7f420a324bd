#pragma once

#include "signrank/sign.hpp"

#include <cstdint>
#include <random>

namespace signrank {

/// Seeded generator with platform-independent integer draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

inline RationalMatrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t lo,
                                            std::int64_t hi) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(lo, hi);
  return m;
}

/// Entries uniform over {-5..5} / {1,2,3}.
inline RationalMatrix random_rational_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rng.uniform(-5, 5), rng.uniform(1, 3));
  return m;
}

/// k-dimensional rational subspace of Q^n; rejects rank-deficient draws.
inline RationalSubspace random_subspace(Rng& rng, std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("random_subspace: k > n");
  if (k == 0) return RationalSubspace::zero(n);
  for (;;) {
    auto b = random_rational_matrix(rng, n, k);
    if (rank(b) == k) return RationalSubspace(std::move(b));
  }
}

inline SignPattern random_pattern(Rng& rng, std::size_t rows, std::size_t cols) {
  SignPattern p(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) p(i, j) = static_cast<Sign>(rng.uniform(0, 2));
  return p;
}

}  // namespace signrank
