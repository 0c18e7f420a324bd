#pragma once

#include "signrank/rank2.hpp"
#include "signrank/subspace_signs.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace signrank {

/// A realization of an n x m pattern (columns read as sign vectors in R^n) of
/// rank at most n - 2, with the data that produced it.
struct RealizationResult {
  RationalMatrix matrix;
  std::size_t claimed_rank = 0;
  Rank2Type type;
  RationalSubspace plane;       // rational 2-dim representative M of the type
  RationalSubspace complement;  // K = M^⊥, dimension n - 2
  std::vector<IntegerVector> column_witnesses;  // sign(K.basis * w_i) = column i
};

struct RealizationOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<RealizationResult> result;
};

/// Rank <= n-2 rational realization. Finds a 2-dim type whose sign set is
/// orthogonal to every column, so every column lies in sign(K) for the rational
/// K = M^⊥; each column then gets an exact witness in K. Exhausted means no
/// realization of rank <= n-2 exists.
inline RealizationOutcome realize_corank2(const SignPattern& a, const Budget& budget = {}) {
  RealizationOutcome out;
  const std::size_t n = a.rows();
  std::vector<SignVector> columns;
  for (std::size_t j = 0; j < a.cols(); ++j) columns.push_back(a.column(j));
  auto found = find_orthogonal_rank2_type(n, columns, budget);
  out.status = found.status;
  if (!found) return out;

  RealizationResult r;
  r.type = *found.value;
  r.plane = r.type.representative();
  r.complement = orth_complement(r.plane);
  const auto& basis = r.complement.basis();
  std::vector<RationalVector> coefficients;
  for (const auto& col : columns) {
    auto w = member_witness(r.complement, col);
    if (!w) throw std::logic_error("realize_corank2: accepted column has no witness in the complement");
    coefficients.push_back(to_rational(*w));
    r.column_witnesses.push_back(std::move(*w));
  }
  r.matrix = basis * RationalMatrix::from_columns(coefficients, basis.cols());
  if (!(sign_of(r.matrix) == a)) throw std::logic_error("realize_corank2: realization has wrong signs");
  r.claimed_rank = rank(r.matrix);
  out.result = std::move(r);
  return out;
}

/// Rational B, C, E with B C = E and prescribed sign patterns.
struct EquationSolution {
  RationalMatrix b, c, e;
  RationalMatrix block;  // realization of [[I, C], [B, E]] whose Schur complement vanishes
};

struct EquationOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<EquationSolution> solution;
};

namespace detail {

// sB: p x n, sC: n x 2, sE: p x 2.
inline EquationOutcome rationalize_two_columns(const SignPattern& sb, const SignPattern& sc, const SignPattern& se,
                                               const Budget& budget) {
  const std::size_t n = sb.cols();
  const std::size_t p = sb.rows();
  SignPattern block(n + p, n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    block(i, i) = Sign::Plus;
    for (std::size_t j = 0; j < 2; ++j) block(i, n + j) = sc(i, j);
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < n; ++j) block(n + i, j) = sb(i, j);
    for (std::size_t j = 0; j < 2; ++j) block(n + i, n + j) = se(i, j);
  }
  // Rank n = (n + 2) - 2: rows are sign vectors in R^{n+2}, so realize the transpose.
  EquationOutcome out;
  auto realized = realize_corank2(block.transpose(), budget);
  out.status = realized.status;
  if (!realized.result) return out;

  EquationSolution sol;
  sol.block = realized.result->matrix.transpose();
  RationalMatrix d_inv(n, n);
  for (std::size_t i = 0; i < n; ++i) d_inv(i, i) = sol.block(i, i).reciprocal();
  sol.b = sol.block.block(n, 0, p, n);
  sol.c = d_inv * sol.block.block(0, n, n, 2);
  sol.e = sol.block.block(n, n, p, 2);
  if (!(sol.b * sol.c == sol.e)) throw std::logic_error("rationalize_equation: nonzero Schur complement");
  out.solution = std::move(sol);
  return out;
}

}  // namespace detail

/// Given sign patterns with sB (p x n) * sC (n x q) = sE (p x q) where q = 2 or
/// p = 2, finds rational matrices in the three classes with an exact product.
/// The 2-row case runs on the transposed equation C^T B^T = E^T. Exhausted means
/// no real solution exists. Throws std::invalid_argument on a dimension mismatch.
inline EquationOutcome rationalize_equation(const SignPattern& sb, const SignPattern& sc, const SignPattern& se,
                                            const Budget& budget = {}) {
  if (sb.cols() != sc.rows() || sb.rows() != se.rows() || sc.cols() != se.cols())
    throw std::invalid_argument("rationalize_equation: dimensions do not compose");
  if (se.cols() == 2) return detail::rationalize_two_columns(sb, sc, se, budget);
  if (se.rows() == 2) {
    auto t = detail::rationalize_two_columns(sc.transpose(), sb.transpose(), se.transpose(), budget);
    if (t.solution) {
      auto& s = *t.solution;
      RationalMatrix b = s.c.transpose();
      RationalMatrix c = s.b.transpose();
      s.b = std::move(b);
      s.c = std::move(c);
      s.e = s.e.transpose();
    }
    return t;
  }
  throw std::invalid_argument("rationalize_equation: E must have 2 rows or 2 columns");
}

}  // namespace signrank
