#pragma once

#include "signrank/random.hpp"
#include "signrank/realize.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace signrank {

struct LMatrixResult {
  bool is_l_matrix = false;
  std::optional<SignVector> falsifier;  // least nonzero x orthogonal to every row
};

/// mr(A) = n (columns) iff no nonzero sign vector is orthogonal to every row.
inline LMatrixResult is_L_matrix(const SignPattern& a) {
  LMatrixResult r;
  for_each_perp_vector(a.cols(), a.row_vectors(), [&](const SignVector& x) {
    if (x.is_zero()) return true;
    r.falsifier = x;
    return false;
  });
  r.is_l_matrix = !r.falsifier.has_value();
  return r;
}

/// A 2-dim type whose sign set every row of A is orthogonal to; found iff mr(A) <= n-2.
inline SearchOutcome<Rank2Type> mr_le_n_minus_2(const SignPattern& a, const Budget& budget = {}) {
  return find_orthogonal_rank2_type(a.cols(), a.row_vectors(), budget);
}

inline bool mr_eq_n_minus_1(const SignPattern& a) {
  return !is_L_matrix(a).is_l_matrix && !mr_le_n_minus_2(a).found();
}

/// Matrix in Q(A) annihilating the (1,-1,0) vector of x; requires every row ⊥ x.
/// Rows meeting supp(x) get weights |N| on agreeing and |P| on opposing entries.
inline RationalMatrix realize_with_null_vector(const SignPattern& a, const SignVector& x) {
  RationalMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const SignVector r = a.row(i);
    if (!orthogonal(r, x)) throw std::invalid_argument("realize_with_null_vector: row not orthogonal to x");
    const auto agree = (r.plus_mask() & x.plus_mask()) | (r.minus_mask() & x.minus_mask());
    const auto oppose = (r.plus_mask() & x.minus_mask()) | (r.minus_mask() & x.plus_mask());
    const long n_agree = std::popcount(agree), n_oppose = std::popcount(oppose);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Sign s = a(i, j);
      if (s == Sign::Zero) continue;
      long weight = 1;
      if ((agree >> j) & 1) weight = n_oppose;
      if ((oppose >> j) & 1) weight = n_agree;
      m(i, j) = s == Sign::Plus ? weight : -weight;
    }
  }
  return m;
}

/// Searches lattice matrices U (m x r, entries -3..3) and solves each column of V
/// exactly so that sign(U V) = A. Returns a verified realization of rank <= r.
inline std::optional<RationalMatrix> random_upper_bound(const SignPattern& a, std::size_t r, std::uint64_t seed,
                                                        std::size_t iterations, const Budget& budget = {}) {
  if (r == 0) throw std::invalid_argument("random_upper_bound: r must be positive");
  Rng rng(seed);
  for (std::size_t it = 0; it < iterations && !budget.expired(); ++it) {
    const auto u = random_integer_matrix(rng, a.rows(), r, -3, 3);
    const auto l = RationalSubspace::column_space(u);
    if (l.dim() == 0) continue;
    std::vector<RationalVector> coefficients;
    bool ok = true;
    for (std::size_t j = 0; j < a.cols() && ok; ++j) {
      auto w = member_witness(l, a.column(j));
      if (!w) ok = false;
      else coefficients.push_back(to_rational(*w));
    }
    if (!ok) continue;
    auto m = l.basis() * RationalMatrix::from_columns(coefficients, l.dim());
    if (sign_of(m) == a) return m;
  }
  return std::nullopt;
}

// Evidence attached to a minimum-rank bracket. Everything is stated for the
// pattern as given (not the transposed working copy) except where noted.
struct MatchingEvidence {
  std::vector<std::pair<std::size_t, std::size_t>> entries;  // nonzero entries, no two in a line
};
struct NullVectorEvidence {
  SignVector x;  // nonzero, orthogonal to every row of the working pattern
};
struct LMatrixEvidence {};  // no nonzero x is orthogonal to every row of the working pattern
struct NotRank2Evidence {};  // the mr <= 2 characterization fails (exhaustive)
struct TypeEvidence {
  Rank2Type type;  // every working row is orthogonal to sign_set_of_type(type)
};
struct NoTypeEvidence {};  // exhaustive type search failed: mr > d - 2
struct RealizationEvidence {
  RationalMatrix matrix;  // in Q(A)
  std::size_t rank = 0;
};

using Evidence = std::variant<MatchingEvidence, Mr2Certificate, NullVectorEvidence, LMatrixEvidence, NotRank2Evidence,
                              TypeEvidence, NoTypeEvidence, RealizationEvidence>;

struct MinRankBracket {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool transposed = false;  // the ladder ran on A^T so that columns = min(m, n)
  bool budget_exceeded = false;
  std::vector<Evidence> certificates;

  bool exact() const { return lower == upper; }
};

struct MinRankOptions {
  Budget budget;
  std::uint64_t seed = 0;
  std::size_t iterations = 200;
};

/// Decision ladder on the orientation with d = min(m, n) columns:
/// 0 (zero), 1 (condenses to 1x1), 2 (monotone certificate), d (L-matrix),
/// <= d-2 (type search), d-1 (both fail). Exact whenever d <= 5; wider gaps are
/// narrowed with lattice factorizations.
inline MinRankBracket min_rank(const SignPattern& a, const MinRankOptions& options = {}) {
  MinRankBracket b;
  b.transposed = a.cols() > a.rows();
  const SignPattern w = b.transposed ? a.transpose() : a;
  const std::size_t d = w.cols();
  auto oriented = [&](RationalMatrix m) { return b.transposed ? m.transpose() : m; };
  auto add_realization = [&](RationalMatrix m) {
    auto original = oriented(std::move(m));
    const auto r = rank(original);
    b.certificates.emplace_back(RealizationEvidence{std::move(original), r});
  };

  auto matching = max_rank_matching(a);
  b.upper = matching.size();
  b.certificates.emplace_back(MatchingEvidence{std::move(matching)});
  if (b.upper == 0) return b;

  b.lower = 1;
  const auto cond = condense(w);
  if (cond.pattern.rows() == 1) {
    RationalMatrix m(w.rows(), w.cols());
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j)
        if (cond.row_map[i].sign != Sign::Zero && cond.col_map[j].sign != Sign::Zero)
          m(i, j) = multiply(multiply(cond.row_map[i].sign, cond.col_map[j].sign), cond.pattern(0, 0)) == Sign::Plus ? 1 : -1;
    add_realization(std::move(m));
    b.upper = 1;
    return b;
  }

  b.lower = 2;
  auto cert = mr_le_2(w, options.budget);
  if (cert) {
    add_realization(realize_rank2(w, *cert.value));
    b.certificates.emplace_back(std::move(*cert.value));
    b.upper = 2;
    return b;
  }
  if (cert.status == SearchStatus::BudgetExceeded) b.budget_exceeded = true;
  else {
    b.lower = 3;
    b.certificates.emplace_back(NotRank2Evidence{});
  }

  const auto lm = is_L_matrix(w);
  if (lm.is_l_matrix) {
    b.lower = b.upper = d;
    b.certificates.emplace_back(LMatrixEvidence{});
    return b;
  }
  b.certificates.emplace_back(NullVectorEvidence{*lm.falsifier});
  b.upper = std::min(b.upper, d - 1);
  add_realization(realize_with_null_vector(w, *lm.falsifier));
  if (b.exact()) return b;

  if (d >= 2 && d - 2 >= b.lower) {
    auto type = mr_le_n_minus_2(w, options.budget);
    if (type) {
      b.upper = std::min(b.upper, d - 2);
      b.certificates.emplace_back(TypeEvidence{*type.value});
      auto realized = realize_corank2(w.transpose(), options.budget);
      if (realized.result) add_realization(realized.result->matrix.transpose());
    } else if (type.status == SearchStatus::Exhausted) {
      b.lower = std::max(b.lower, d - 1);
      b.certificates.emplace_back(NoTypeEvidence{});
    } else {
      b.budget_exceeded = true;
    }
  }

  for (std::size_t r = b.lower; r < b.upper; ++r) {
    auto m = random_upper_bound(w, r, options.seed, options.iterations, options.budget);
    if (m) {
      b.upper = r;
      add_realization(std::move(*m));
      break;
    }
  }
  return b;
}

/// Re-checks every certificate in the bracket independently of how it was found.
inline bool verify_bracket(const SignPattern& a, const MinRankBracket& b) {
  if (b.lower > b.upper || b.upper > std::min(a.rows(), a.cols())) return false;
  const SignPattern w = b.transposed ? a.transpose() : a;
  for (const auto& e : b.certificates) {
    const bool ok = std::visit(
        [&](const auto& ev) -> bool {
          using T = std::decay_t<decltype(ev)>;
          if constexpr (std::is_same_v<T, MatchingEvidence>) {
            std::vector<char> row_used(a.rows(), 0), col_used(a.cols(), 0);
            for (auto [i, j] : ev.entries) {
              if (a(i, j) == Sign::Zero || row_used[i] || col_used[j]) return false;
              row_used[i] = col_used[j] = 1;
            }
            return ev.entries.size() >= b.upper;
          } else if constexpr (std::is_same_v<T, Mr2Certificate>) {
            return verify_mr2_certificate(w, ev);
          } else if constexpr (std::is_same_v<T, NullVectorEvidence>) {
            if (ev.x.is_zero() || ev.x.size() != w.cols()) return false;
            for (std::size_t i = 0; i < w.rows(); ++i)
              if (!orthogonal(w.row(i), ev.x)) return false;
            return true;
          } else if constexpr (std::is_same_v<T, LMatrixEvidence>) {
            return is_L_matrix(w).is_l_matrix;
          } else if constexpr (std::is_same_v<T, NotRank2Evidence>) {
            return !mr_le_2(w).found();
          } else if constexpr (std::is_same_v<T, TypeEvidence>) {
            const auto signs = sign_set_of_type(ev.type);
            for (std::size_t i = 0; i < w.rows(); ++i)
              for (const auto& v : signs)
                if (!orthogonal(w.row(i), v)) return false;
            return !ev.type.degenerate();
          } else if constexpr (std::is_same_v<T, NoTypeEvidence>) {
            return true;  // exhaustive negative; nothing finite to re-check cheaply
          } else {
            return sign_of(ev.matrix) == a && rank(ev.matrix) == ev.rank && ev.rank >= b.lower;
          }
        },
        e);
    if (!ok) return false;
  }
  return true;
}

}  // namespace signrank
