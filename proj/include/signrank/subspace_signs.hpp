#pragma once

#include "signrank/feasibility.hpp"
#include "signrank/sign.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace signrank {

struct SubspaceSignReport {
  RationalSubspace subspace;
  SignVectorSet signs;
  /// Integer coefficient vector x with sign(basis * x) equal to the key.
  std::map<SignVector, IntegerVector> witnesses;
};

namespace detail {

// Constraint rows on coefficients x for "sign(B x)_i = s_i".
inline void add_sign_constraint(const RationalVector& row, Sign s, std::vector<RationalVector>& eq,
                                std::vector<RationalVector>& pos) {
  if (s == Sign::Zero) {
    eq.push_back(row);
    return;
  }
  RationalVector r = row;
  if (s == Sign::Minus)
    for (auto& x : r) x = -x;
  pos.push_back(std::move(r));
}

}  // namespace detail

/// Rational x with sign(B x) = s where B is the basis of `l`, or nullopt if s is not in sign(L).
inline std::optional<IntegerVector> member_witness(const RationalSubspace& l, const SignVector& s) {
  if (s.size() != l.ambient_dim()) throw std::invalid_argument("member_witness: length mismatch");
  const auto& b = l.basis();
  std::vector<RationalVector> eq, pos;
  for (std::size_t i = 0; i < b.rows(); ++i) detail::add_sign_constraint(b.row(i), s[i], eq, pos);
  auto x = strict_feasibility(eq, pos, l.dim());
  if (!x) return std::nullopt;
  return primitive_integer_vector(*x);
}

/// Exact sign(L) by DFS over coordinates in ambient order; a prefix is pruned as
/// soon as its constraint system is infeasible (unassigned coordinates are free).
///
/// Each node carries a witness x that satisfies the prefix signs strictly and a
/// basis of the prefix's equality space. For the next row a: if a vanishes on that
/// space only 0 is possible; if a.x = 0 all three signs are reachable by nudging x;
/// otherwise "opposite sign" and "zero" are feasible together (convexity), so one
/// solver call settles both.
inline SubspaceSignReport sign_vectors(const RationalSubspace& l) {
  const auto& b = l.basis();
  const std::size_t n = l.ambient_dim();
  const std::size_t k = l.dim();
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(b.row(i));

  SubspaceSignReport report{l, SignVectorSet(n), {}};
  std::vector<SignVector> found;
  SignVector prefix(n);
  std::vector<RationalVector> pos;  // rows required to be > 0 at the witness

  auto negated = [](RationalVector v) {
    for (auto& x : v) x = -x;
    return v;
  };

  auto rec = [&](auto&& self, std::size_t i, const RationalMatrix& span, const RationalVector& x) -> void {
    if (i == n) {
      found.push_back(prefix);
      report.witnesses.emplace(prefix, primitive_integer_vector(x));
      return;
    }
    const RationalVector& a = rows[i];
    RationalVector a_span(span.cols());
    for (std::size_t v = 0; v < span.cols(); ++v)
      for (std::size_t j = 0; j < k; ++j)
        if (!a[j].is_zero() && !span(j, v).is_zero()) a_span[v] += a[j] * span(j, v);
    const auto pivot = std::find_if(a_span.begin(), a_span.end(), [](const Rational& r) { return !r.is_zero(); });

    auto descend = [&](Sign s, const RationalMatrix& child_span, const RationalVector& child_x) {
      if (s != Sign::Zero) pos.push_back(s == Sign::Plus ? a : negated(a));
      prefix.set(i, s);
      self(self, i + 1, child_span, child_x);
      prefix.set(i, Sign::Zero);
      if (s != Sign::Zero) pos.pop_back();
    };
    auto zero_span = [&] {
      return span * nullspace_basis(RationalMatrix::from_rows({a_span}, a_span.size())).basis();
    };

    if (pivot == a_span.end()) {
      descend(Sign::Zero, span, x);
      return;
    }
    const Rational value = dot(a, x);
    if (value.is_zero()) {
      RationalVector dir = span.column(static_cast<std::size_t>(pivot - a_span.begin()));
      if (pivot->sign() < 0) dir = negated(std::move(dir));
      Rational step = 1;
      for (const auto& p : pos) {
        const Rational slope = dot(p, dir);
        if (slope.is_zero()) continue;
        const Rational limit = dot(p, x) / abs(slope) / 2;
        if (limit < step) step = limit;
      }
      RationalVector up = x, down = x;
      for (std::size_t j = 0; j < k; ++j) {
        up[j] += step * dir[j];
        down[j] -= step * dir[j];
      }
      descend(Sign::Zero, zero_span(), x);
      descend(Sign::Plus, span, up);
      descend(Sign::Minus, span, down);
      return;
    }
    const Sign current = sign_of(value);
    pos.push_back(current == Sign::Plus ? negated(a) : a);
    const auto opposite = strict_feasibility_in_span(span, pos);
    pos.pop_back();
    if (!opposite) {
      descend(current, span, x);
      return;
    }
    const Rational other = dot(a, *opposite);
    const Rational lambda = -other / (value - other);
    RationalVector middle(k);
    for (std::size_t j = 0; j < k; ++j) middle[j] = lambda * x[j] + (1 - lambda) * (*opposite)[j];
    descend(Sign::Zero, zero_span(), middle);
    if (current == Sign::Plus) {
      descend(Sign::Plus, span, x);
      descend(Sign::Minus, span, *opposite);
    } else {
      descend(Sign::Plus, span, *opposite);
      descend(Sign::Minus, span, x);
    }
  };
  rec(rec, 0, RationalMatrix::identity(k), RationalVector(k));
  report.signs = SignVectorSet(n, std::move(found));
  return report;
}

struct DualityReport {
  bool holds = false;
  SignVectorSet complement_signs;  // sign(L^⊥)
  SignVectorSet perp_of_signs;     // sign(L)^⊥
  std::vector<SignVector> discrepancy;
};

/// Checks sign(L)^⊥ = sign(L^⊥) by computing both sides independently.
inline DualityReport verify_duality(const RationalSubspace& l) {
  DualityReport r;
  r.complement_signs = sign_vectors(orth_complement(l)).signs;
  r.perp_of_signs = set_perp(sign_vectors(l).signs);
  r.discrepancy = symmetric_difference(r.complement_signs, r.perp_of_signs);
  r.holds = r.discrepancy.empty();
  return r;
}

/// Returns whether sign(K) = sign(L); equal sign sets with different dimensions
/// throw std::logic_error.
inline bool same_sign_dim_check(const RationalSubspace& k, const RationalSubspace& l) {
  if (k.ambient_dim() != l.ambient_dim()) throw std::invalid_argument("same_sign_dim_check: ambient mismatch");
  const bool same = sign_vectors(k).signs == sign_vectors(l).signs;
  if (same && k.dim() != l.dim()) throw std::logic_error("equal sign sets with different dimensions");
  return same;
}

}  // namespace signrank
