#pragma once

#include "signrank/random.hpp"
#include "signrank/rank2.hpp"
#include "signrank/subspace_signs.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace signrank {

enum class ExtremalKind { Max, Min, Witness, LowerBound };

inline std::string_view to_string(ExtremalKind k) {
  switch (k) {
    case ExtremalKind::Max: return "max";
    case ExtremalKind::Min: return "min";
    case ExtremalKind::Witness: return "witness";
    case ExtremalKind::LowerBound: return "lower_bound";
  }
  return "unknown";
}

struct ExtremalReport {
  std::string quantity;  // e.g. "S_{2,n}"
  std::size_t n = 0;
  std::size_t k = 0;
  ExtremalKind kind = ExtremalKind::Witness;
  std::uint64_t count = 0;
  std::uint64_t formula = 0;
  bool holds = false;  // count compares correctly against formula for this kind
  std::optional<RationalMatrix> witness_basis;
  std::optional<SignPattern> witness_pattern;
  std::vector<std::uint64_t> achieved;  // distinct cardinalities seen, when exhaustive
  std::string note;
};

inline std::uint64_t pow3(std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

/// |x^⊥| for a sign vector with t nonzeros in {+,-,0}^n.
inline std::uint64_t perp_count_formula(std::size_t n, std::size_t t) {
  return pow3(n - t) * (pow3(t) - 2 * ((std::uint64_t{1} << t) - 1));
}

/// The 2n x n stack [T1; T2]: T1 has zero diagonal, T2 has - diagonal, both + above
/// and - below the diagonal.
inline SignPattern t1t2_pattern(std::size_t n) {
  if (n < 2) throw std::invalid_argument("t1t2_pattern: n must be at least 2");
  SignPattern b(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Sign off = j > i ? Sign::Plus : Sign::Minus;
      b(i, j) = i == j ? Sign::Zero : off;
      b(n + i, j) = i == j ? Sign::Minus : off;
    }
  return b;
}

/// Realizes [T1; T2] at rank 2 and counts the sign vectors of its row space
/// (the column space of the transposed realization) in R^n.
inline ExtremalReport s2_witness_count(std::size_t n) {
  const auto pattern = t1t2_pattern(n);
  const auto cert = mr_le_2(pattern);
  if (!cert) throw std::logic_error("s2_witness_count: [T1;T2] has no mr 2 certificate");
  const auto realization = realize_rank2(pattern, *cert.value);
  const auto v = RationalSubspace::column_space(realization.transpose());
  ExtremalReport r;
  r.quantity = "S_{2,n}";
  r.n = n;
  r.k = v.dim();
  r.kind = ExtremalKind::Witness;
  r.count = sign_vectors(v).signs.size();
  r.formula = 4 * n + 1;
  r.holds = r.count == r.formula && r.k == 2;
  r.witness_basis = v.basis();
  r.witness_pattern = pattern;
  r.note = "V = row space of the rank-2 realization of [T1;T2]";
  return r;
}

/// Maximum |sign(L)| over every 2-dim type of R^n, 2 <= n <= 6.
inline ExtremalReport s2_exhaustive_max(std::size_t n) {
  if (n < 2 || n > 6) throw std::out_of_range("s2_exhaustive_max: n must be in [2, 6]");
  ExtremalReport r;
  r.quantity = "S_{2,n}";
  r.n = n;
  r.k = 2;
  r.kind = ExtremalKind::Max;
  r.formula = 4 * n + 1;
  std::set<std::uint64_t> achieved;
  std::optional<Rank2Type> best;
  for_each_rank2_type(
      n,
      [&](const Rank2Type& t) {
        const std::uint64_t c = sign_set_of_type(t).size();
        achieved.insert(c);
        if (c > r.count) {
          r.count = c;
          best = t;
        }
        return true;
      },
      2);
  r.achieved.assign(achieved.begin(), achieved.end());
  r.holds = r.count == r.formula;
  if (best) r.witness_basis = best->representative().basis();
  return r;
}

/// |sign(span{e1..ek})| = 3^k, plus a lower-bound check on random k-dim subspaces.
inline ExtremalReport s_min_witness(std::size_t k, std::size_t n, std::size_t samples = 200, std::uint64_t seed = 0) {
  if (k < 1 || k > n) throw std::out_of_range("s_min_witness: need 1 <= k <= n");
  RationalMatrix basis(n, k);
  for (std::size_t i = 0; i < k; ++i) basis(i, i) = 1;
  ExtremalReport r;
  r.quantity = "s_{k,n}";
  r.n = n;
  r.k = k;
  r.kind = ExtremalKind::Min;
  r.count = sign_vectors(RationalSubspace(basis)).signs.size();
  r.formula = pow3(k);
  r.witness_basis = basis;
  bool bound = true;
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s)
    bound = bound && sign_vectors(random_subspace(rng, n, k)).signs.size() >= r.formula;
  r.holds = r.count == r.formula && bound;
  return r;
}

/// K = (1,...,1)^⊥: counts sign(K) directly and as set_perp({+...+}), and checks
/// random hyperplanes never exceed 3^n - 2(2^n - 1).
inline ExtremalReport s_hyperplane_max(std::size_t n, std::size_t samples = 200, std::uint64_t seed = 0) {
  if (n < 2) throw std::out_of_range("s_hyperplane_max: n must be at least 2");
  const auto k = orth_complement(RationalSubspace(RationalMatrix::from_columns({RationalVector(n, 1)}, n)));
  ExtremalReport r;
  r.quantity = "S_{n-1,n}";
  r.n = n;
  r.k = n - 1;
  r.kind = ExtremalKind::Max;
  r.formula = pow3(n) - 2 * ((std::uint64_t{1} << n) - 1);
  const auto direct = sign_vectors(k).signs;
  SignVector all_plus(n, SignVector(n).full_mask(), 0);
  const auto via_perp = set_perp(SignVectorSet(n, {all_plus}));
  r.count = direct.size();
  r.witness_basis = k.basis();
  bool bound = true;
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s)
    bound = bound && sign_vectors(random_subspace(rng, n, n - 1)).signs.size() <= r.formula;
  r.holds = direct == via_perp && r.count == r.formula && bound;
  return r;
}

/// Realizes [+] ⊕ [T1;T2](n-1) at rank 3 and counts the sign vectors of its row
/// space in R^n; must reach 3(4n - 3).
inline ExtremalReport s3_lower_witness(std::size_t n) {
  if (n < 3) throw std::out_of_range("s3_lower_witness: n must be at least 3");
  const auto inner = t1t2_pattern(n - 1);
  const auto cert = mr_le_2(inner);
  if (!cert) throw std::logic_error("s3_lower_witness: [T1;T2] has no mr 2 certificate");
  const auto inner_real = realize_rank2(inner, *cert.value);
  RationalMatrix m(inner.rows() + 1, n);
  m(0, 0) = 1;
  for (std::size_t i = 0; i < inner.rows(); ++i)
    for (std::size_t j = 0; j < n - 1; ++j) m(i + 1, j + 1) = inner_real(i, j);
  const auto v = RationalSubspace::column_space(m.transpose());
  ExtremalReport r;
  r.quantity = "S_{3,n}";
  r.n = n;
  r.k = v.dim();
  r.kind = ExtremalKind::LowerBound;
  r.count = sign_vectors(v).signs.size();
  r.formula = 3 * (4 * n - 3);
  r.holds = r.k == 3 && r.count >= r.formula;
  r.witness_basis = v.basis();
  r.witness_pattern = direct_sum(SignPattern::from_strings({"+"}), inner);
  r.note = "V = row space of [1] (+) rank-2 realization of [T1;T2](n-1)";
  return r;
}

}  // namespace signrank
