#pragma once

#include "signrank/budget.hpp"
#include "signrank/sign.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace signrank {

// ---------------------------------------------------------------------------
// mr <= 2 characterization
// ---------------------------------------------------------------------------

/// Evidence that mr(A) = 2: after condensation, flipping the rows in
/// `row_signature` and the columns in `signature` and reading the columns in
/// `column_order` makes every row monotone (- before 0 before +) with at most one
/// zero.
struct Mr2Certificate {
  Condensation condensation;
  std::vector<Sign> row_signature;        // per condensed row, Plus or Minus
  std::vector<Sign> signature;            // per condensed column, Plus or Minus
  std::vector<std::size_t> column_order;  // condensed column indices, left to right
};

namespace detail {

inline int sign_rank(Sign s) { return s == Sign::Minus ? 0 : s == Sign::Zero ? 1 : 2; }

// Columns of `p` restricted to `cols`, each row and column multiplied by its
// signature entry, sorted lexicographically. Returns the order if every row is
// then monotone.
inline std::optional<std::vector<std::size_t>> monotone_order(const SignPattern& p, const std::vector<Sign>& row_signature,
                                                              const std::vector<Sign>& signature,
                                                              const std::vector<std::size_t>& cols) {
  auto entry = [&](std::size_t i, std::size_t j) {
    return sign_rank(multiply(row_signature[i], multiply(p(i, j), signature[j])));
  };
  std::vector<std::size_t> order = cols;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < p.rows(); ++i)
      if (entry(i, a) != entry(i, b)) return entry(i, a) < entry(i, b);
    return false;
  });
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t t = 1; t < order.size(); ++t)
      if (entry(i, order[t - 1]) > entry(i, order[t])) return std::nullopt;
  return order;
}

}  // namespace detail

/// Checks the certificate against A from scratch.
inline bool verify_mr2_certificate(const SignPattern& a, const Mr2Certificate& cert) {
  const auto fresh = condense(a);
  const auto& p = cert.condensation.pattern;
  if (!(fresh.pattern == p) || fresh.row_map != cert.condensation.row_map ||
      fresh.col_map != cert.condensation.col_map)
    return false;
  if (p.rows() < 2 || cert.row_signature.size() != p.rows() || cert.signature.size() != p.cols() ||
      cert.column_order.size() != p.cols())
    return false;
  std::vector<std::size_t> sorted = cert.column_order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < sorted.size(); ++j)
    if (sorted[j] != j) return false;
  for (Sign s : cert.signature)
    if (s == Sign::Zero) return false;
  for (Sign s : cert.row_signature)
    if (s == Sign::Zero) return false;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    int zeros = 0;
    int previous = -1;
    for (std::size_t t = 0; t < p.cols(); ++t) {
      const auto j = cert.column_order[t];
      const Sign s = multiply(cert.row_signature[i], multiply(p(i, j), cert.signature[j]));
      zeros += s == Sign::Zero;
      if (detail::sign_rank(s) < previous) return false;
      previous = detail::sign_rank(s);
    }
    if (zeros > 1) return false;
  }
  return true;
}

/// Decides mr(A) = 2. Patterns with mr <= 1 (condensation empty or 1x1) get no
/// certificate. For each choice of leftmost column f the row signs are forced
/// (a row reads - or 0 at f, and a row with 0 at f is + elsewhere); column
/// signatures are then assigned with f fixed to +, and a partial signature is
/// abandoned once its assigned columns admit no monotone order.
inline SearchOutcome<Mr2Certificate> mr_le_2(const SignPattern& a, const Budget& budget = {}) {
  SearchOutcome<Mr2Certificate> out;
  auto c = condense(a);
  const auto& p = c.pattern;
  if (p.rows() < 2) return out;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    int zeros = 0;
    for (std::size_t j = 0; j < p.cols(); ++j) zeros += p(i, j) == Sign::Zero;
    if (zeros > 1) return out;
  }
  const std::size_t m = p.rows(), n = p.cols();
  std::vector<Sign> signature(n, Sign::Plus);
  std::vector<Sign> row_signature(m, Sign::Plus);
  std::vector<std::size_t> assigned;
  std::size_t nodes = 0;
  bool timed_out = false;
  std::optional<std::vector<std::size_t>> result;

  for (std::size_t f = 0; f < n && !result && !timed_out; ++f) {
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < n; ++j)
      if (j != f) rest.push_back(j);
    // Rows with 0 at f take their sign from their first assigned nonzero column.
    auto fix_rows = [&]() {
      for (std::size_t i = 0; i < m; ++i) {
        if (p(i, f) != Sign::Zero) {
          row_signature[i] = negate(p(i, f));
          continue;
        }
        row_signature[i] = Sign::Plus;
        for (auto j : assigned)
          if (j != f && p(i, j) != Sign::Zero) {
            row_signature[i] = multiply(p(i, j), signature[j]);
            break;
          }
      }
    };
    auto rec = [&](auto&& self, std::size_t t) -> bool {
      if ((++nodes & 0x3ff) == 0 && budget.expired()) {
        timed_out = true;
        return true;
      }
      if (t == rest.size()) {
        fix_rows();
        result = detail::monotone_order(p, row_signature, signature, assigned);
        return result.has_value();
      }
      const auto j = rest[t];
      assigned.push_back(j);
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        signature[j] = s;
        fix_rows();
        if (detail::monotone_order(p, row_signature, signature, assigned) && self(self, t + 1)) return true;
        if (timed_out) return true;
      }
      signature[j] = Sign::Plus;
      assigned.pop_back();
      return false;
    };
    assigned = {f};
    signature.assign(n, Sign::Plus);
    rec(rec, 0);
  }
  if (result) {
    out.status = SearchStatus::Found;
    out.value = Mr2Certificate{std::move(c), row_signature, signature, *result};
  } else if (timed_out) {
    out.status = SearchStatus::BudgetExceeded;
  }
  return out;
}

/// Rational matrix in Q(A) of rank 2 built from a certificate. In monotone
/// coordinates column t gets abscissa t+1 and row i becomes (x_t - c_i), with
/// c_i at the row's zero or halfway between its - and + blocks; every row is
/// affine in x, so the rank is at most 2. Throws std::invalid_argument on a bad
/// certificate.
inline RationalMatrix realize_rank2(const SignPattern& a, const Mr2Certificate& cert) {
  if (!verify_mr2_certificate(a, cert)) throw std::invalid_argument("realize_rank2: invalid certificate");
  const auto& p = cert.condensation.pattern;
  const std::size_t nc = p.cols();
  std::vector<std::size_t> position(nc);
  for (std::size_t t = 0; t < nc; ++t) position[cert.column_order[t]] = t;

  RationalMatrix condensed(p.rows(), nc);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    // Monotone row: count of - entries, then optional zero, then + entries.
    std::size_t minus = 0;
    bool has_zero = false;
    for (std::size_t j = 0; j < nc; ++j) {
      const Sign s = multiply(cert.row_signature[i], multiply(p(i, j), cert.signature[j]));
      minus += s == Sign::Minus;
      has_zero = has_zero || s == Sign::Zero;
    }
    // Abscissas are 1..nc; the threshold sits at minus+1 (a zero) or minus+1/2.
    const Rational threshold = has_zero ? Rational(static_cast<long>(minus + 1)) : Rational(static_cast<long>(2 * minus + 1), 2);
    for (std::size_t j = 0; j < nc; ++j) {
      const Rational value = Rational(static_cast<long>(position[j] + 1)) - threshold;
      condensed(i, j) = multiply(cert.row_signature[i], cert.signature[j]) == Sign::Minus ? -value : value;
    }
  }

  RationalMatrix out(a.rows(), a.cols());
  const auto& rows = cert.condensation.row_map;
  const auto& cols = cert.condensation.col_map;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (rows[i].sign == Sign::Zero) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (cols[j].sign == Sign::Zero) continue;
      const Rational& v = condensed(rows[i].index, cols[j].index);
      out(i, j) = multiply(rows[i].sign, cols[j].sign) == Sign::Plus ? v : -v;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Combinatorial types of 2-dimensional subspaces
// ---------------------------------------------------------------------------

/// Type of the subspace spanned by the columns of an n x 2 matrix whose row i is
/// 0 for i in zero_set and orientation[i] * (1, j + 1) for i in classes[j].
/// Indices are 0-based.
struct Rank2Type {
  std::size_t ambient = 0;
  std::vector<std::size_t> zero_set;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<Sign> orientation;  // Zero exactly on zero_set

  /// Fewer than two classes: the representative has dimension 0 or 1.
  bool degenerate() const { return classes.size() < 2; }

  RationalMatrix generator() const {
    RationalMatrix g(ambient, 2);
    for (std::size_t j = 0; j < classes.size(); ++j)
      for (auto i : classes[j]) {
        const long o = orientation[i] == Sign::Minus ? -1 : 1;
        g(i, 0) = o;
        g(i, 1) = o * static_cast<long>(j + 1);
      }
    return g;
  }

  RationalSubspace representative() const { return RationalSubspace::column_space(generator()); }

  friend bool operator==(const Rank2Type&, const Rank2Type&) = default;
};

/// Sign set of the type's representative, by sweeping directions (a, b) of the
/// parameter plane: coordinate i reads orientation_i * (a + b * slope_i), and the
/// sweep samples every critical direction and every sector between them.
inline SignVectorSet sign_set_of_type(const Rank2Type& t) {
  const std::size_t c = t.classes.size();
  std::vector<SignVector> out{SignVector(t.ambient)};
  if (c == 0) return SignVectorSet(t.ambient, std::move(out));
  // b = 1, a doubled: critical points -2(j+1), sectors at odd offsets.
  std::vector<long> samples;
  for (std::size_t j = 0; j < c; ++j) {
    const long crit = -2 * static_cast<long>(j + 1);
    samples.insert(samples.end(), {crit - 1, crit, crit + 1});
  }
  for (long a2 : samples) {
    SignVector v(t.ambient);
    for (std::size_t j = 0; j < c; ++j) {
      const long value = a2 + 2 * static_cast<long>(j + 1);
      const Sign s = value > 0 ? Sign::Plus : value < 0 ? Sign::Minus : Sign::Zero;
      for (auto i : t.classes[j]) v.set(i, multiply(s, t.orientation[i]));
    }
    out.push_back(v);
    out.push_back(v.negated());
  }
  return SignVectorSet(t.ambient, std::move(out));
}

/// Visits every Rank2Type of R^n once: fewer classes first, then label vectors
/// (zero or class index per coordinate) in lexicographic order, then
/// orientations. The lowest nonzero coordinate is oriented + (global negation
/// does not change the subspace). `visit` returns false to stop. Returns false if
/// stopped early.
template <typename Visit>
bool for_each_rank2_type(std::size_t n, Visit&& visit, std::size_t min_classes = 0,
                         std::size_t max_classes = static_cast<std::size_t>(-1)) {
  if (n == 0) throw std::invalid_argument("for_each_rank2_type: n must be positive");
  max_classes = std::min(max_classes, n);
  for (std::size_t c = min_classes; c <= max_classes; ++c) {
    // labels[i] in {0 = zero set, 1..c = class}
    std::vector<std::size_t> labels(n, 0);
    for (;;) {
      std::vector<std::size_t> counts(c + 1, 0);
      for (auto l : labels) ++counts[l];
      const bool surjective = std::all_of(counts.begin() + 1, counts.end(), [](std::size_t k) { return k > 0; });
      if (surjective) {
        Rank2Type t;
        t.ambient = n;
        t.classes.assign(c, {});
        t.orientation.assign(n, Sign::Zero);
        std::vector<std::size_t> nonzero;
        for (std::size_t i = 0; i < n; ++i) {
          if (labels[i] == 0) t.zero_set.push_back(i);
          else {
            t.classes[labels[i] - 1].push_back(i);
            nonzero.push_back(i);
          }
        }
        const std::size_t free_bits = nonzero.empty() ? 0 : nonzero.size() - 1;
        for (std::size_t mask = 0; mask < (std::size_t{1} << free_bits); ++mask) {
          for (std::size_t b = 0; b < nonzero.size(); ++b)
            t.orientation[nonzero[b]] = (b > 0 && ((mask >> (b - 1)) & 1)) ? Sign::Minus : Sign::Plus;
          if (!visit(static_cast<const Rank2Type&>(t))) return false;
        }
      }
      // odometer, last coordinate fastest
      std::size_t i = n;
      while (i > 0 && labels[i - 1] == c) labels[--i] = 0;
      if (i == 0) break;
      ++labels[i - 1];
    }
  }
  return true;
}

/// First genuinely 2-dimensional type t (in enumeration order) with every vector
/// of `vectors` orthogonal to all of sign_set_of_type(t), i.e. every vector lies
/// in sign(L^⊥) for the representative L. Exhausted means no 2-dimensional
/// subspace of R^n has all of them in its orthogonal complement's sign set.
inline SearchOutcome<Rank2Type> find_orthogonal_rank2_type(std::size_t n, const std::vector<SignVector>& vectors,
                                                           const Budget& budget = {}) {
  SearchOutcome<Rank2Type> out;
  for (const auto& v : vectors)
    if (v.size() != n) throw std::invalid_argument("find_orthogonal_rank2_type: length mismatch");
  if (n < 2) return out;
  std::vector<SignVector> nonzero;
  for (const auto& v : vectors)
    if (!v.is_zero()) nonzero.push_back(v);
  std::size_t visited = 0;
  for_each_rank2_type(
      n,
      [&](const Rank2Type& t) {
        if ((++visited & 0xff) == 0 && budget.expired()) {
          out.status = SearchStatus::BudgetExceeded;
          return false;
        }
        const auto signs = sign_set_of_type(t);
        for (const auto& v : nonzero)
          for (const auto& w : signs)
            if (!detail::orthogonal_unchecked(v, w)) return true;
        out.status = SearchStatus::Found;
        out.value = t;
        return false;
      },
      2);
  return out;
}

}  // namespace signrank
