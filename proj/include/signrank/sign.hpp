#pragma once

#include "signrank/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace signrank {

enum class Sign : std::uint8_t { Zero = 0, Plus = 1, Minus = 2 };

constexpr Sign negate(Sign s) {
  return s == Sign::Plus ? Sign::Minus : s == Sign::Minus ? Sign::Plus : Sign::Zero;
}

constexpr Sign multiply(Sign a, Sign b) {
  if (a == Sign::Zero || b == Sign::Zero) return Sign::Zero;
  return a == b ? Sign::Plus : Sign::Minus;
}

constexpr char to_char(Sign s) { return s == Sign::Plus ? '+' : s == Sign::Minus ? '-' : '0'; }

inline std::optional<Sign> sign_from_char(char c) {
  switch (c) {
    case '+': return Sign::Plus;
    case '-': return Sign::Minus;
    case '0': return Sign::Zero;
    default: return std::nullopt;
  }
}

inline Sign sign_of(const Rational& x) {
  const int s = x.sign();
  return s > 0 ? Sign::Plus : s < 0 ? Sign::Minus : Sign::Zero;
}

inline Sign sign_of(const BigInt& x) {
  const int s = x.sign();
  return s > 0 ? Sign::Plus : s < 0 ? Sign::Minus : Sign::Zero;
}

/// Element of {+,0,-}^n, n <= 32, packed as a positive and a negative bit plane.
class SignVector {
 public:
  static constexpr std::size_t max_size = 32;
  using Mask = std::uint32_t;

  SignVector() = default;
  explicit SignVector(std::size_t n) : size_(static_cast<std::uint8_t>(n)) {
    if (n > max_size) throw std::length_error("SignVector: length exceeds 32");
  }
  SignVector(std::size_t n, Mask plus, Mask minus) : SignVector(n) {
    if ((plus & minus) != 0 || ((plus | minus) & ~full_mask()) != 0)
      throw std::invalid_argument("SignVector: inconsistent masks");
    plus_ = plus;
    minus_ = minus;
  }

  static SignVector from_string(std::string_view text) {
    SignVector v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      const auto s = sign_from_char(text[i]);
      if (!s) throw std::invalid_argument("SignVector: bad character '" + std::string(1, text[i]) + "'");
      v.set(i, *s);
    }
    return v;
  }

  std::size_t size() const { return size_; }
  Mask plus_mask() const { return plus_; }
  Mask minus_mask() const { return minus_; }
  Mask support() const { return plus_ | minus_; }
  Mask full_mask() const { return size_ == 32 ? ~Mask{0} : (Mask{1} << size_) - 1; }
  std::size_t nonzeros() const { return static_cast<std::size_t>(std::popcount(support())); }
  bool is_zero() const { return support() == 0; }

  Sign operator[](std::size_t i) const {
    const Mask bit = Mask{1} << i;
    return (plus_ & bit) ? Sign::Plus : (minus_ & bit) ? Sign::Minus : Sign::Zero;
  }

  void set(std::size_t i, Sign s) {
    const Mask bit = Mask{1} << i;
    plus_ &= ~bit;
    minus_ &= ~bit;
    if (s == Sign::Plus) plus_ |= bit;
    if (s == Sign::Minus) minus_ |= bit;
  }

  SignVector negated() const { return SignVector(size_, minus_, plus_); }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) s[i] = to_char((*this)[i]);
    return s;
  }

  friend bool operator==(const SignVector&, const SignVector&) = default;

  /// Canonical order: lexicographic in index order with Zero < Plus < Minus.
  friend bool operator<(const SignVector& a, const SignVector& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    const Mask diff = (a.plus_ ^ b.plus_) | (a.minus_ ^ b.minus_);
    if (diff == 0) return false;
    const auto i = static_cast<std::size_t>(std::countr_zero(diff));
    return static_cast<int>(a[i]) < static_cast<int>(b[i]);
  }

 private:
  std::uint8_t size_ = 0;
  Mask plus_ = 0;
  Mask minus_ = 0;
};

inline SignVector sign_of(const RationalVector& v) {
  SignVector s(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) s.set(i, sign_of(v[i]));
  return s;
}

inline SignVector sign_of(const IntegerVector& v) {
  SignVector s(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) s.set(i, sign_of(v[i]));
  return s;
}

namespace detail {
inline bool orthogonal_unchecked(const SignVector& c, const SignVector& x) {
  if ((c.support() & x.support()) == 0) return true;
  const auto agree = (c.plus_mask() & x.plus_mask()) | (c.minus_mask() & x.minus_mask());
  const auto oppose = (c.plus_mask() & x.minus_mask()) | (c.minus_mask() & x.plus_mask());
  return agree != 0 && oppose != 0;
}
}  // namespace detail

/// c ⊥ x: disjoint supports, or some coordinate where they agree and one where they oppose.
inline bool orthogonal(const SignVector& c, const SignVector& x) {
  if (c.size() != x.size()) throw std::invalid_argument("orthogonal: length mismatch");
  return detail::orthogonal_unchecked(c, x);
}

/// Sorted, deduplicated set of sign vectors of a common length.
class SignVectorSet {
 public:
  SignVectorSet() = default;
  explicit SignVectorSet(std::size_t n) : n_(n) {}
  SignVectorSet(std::size_t n, std::vector<SignVector> items) : n_(n), items_(std::move(items)) {
    for (const auto& v : items_)
      if (v.size() != n_) throw std::invalid_argument("SignVectorSet: length mismatch");
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  /// All 3^n sign vectors of length n, in canonical order.
  static SignVectorSet all(std::size_t n) {
    std::vector<SignVector> items;
    SignVector v(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == n) {
        items.push_back(v);
        return;
      }
      for (Sign s : {Sign::Zero, Sign::Plus, Sign::Minus}) {
        v.set(i, s);
        rec(i + 1);
      }
      v.set(i, Sign::Zero);
    };
    rec(0);
    return SignVectorSet(n, std::move(items));
  }

  std::size_t ambient() const { return n_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<SignVector>& items() const { return items_; }

  bool contains(const SignVector& v) const { return std::binary_search(items_.begin(), items_.end(), v); }

  bool includes(const SignVectorSet& other) const {
    return std::includes(items_.begin(), items_.end(), other.items_.begin(), other.items_.end());
  }

  bool negation_closed() const {
    return std::all_of(items_.begin(), items_.end(), [&](const SignVector& v) { return contains(v.negated()); });
  }

  friend bool operator==(const SignVectorSet&, const SignVectorSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<SignVector> items_;
};

inline std::vector<SignVector> symmetric_difference(const SignVectorSet& a, const SignVectorSet& b) {
  std::vector<SignVector> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Canonical-order DFS over {+,0,-}^n for vectors orthogonal to every member of `s`.
/// `visit` returns false to stop the search early.
template <typename Visit>
void for_each_perp_vector(std::size_t n, const std::vector<SignVector>& s, Visit&& visit) {
  using Mask = SignVector::Mask;
  SignVector c(n);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    const Mask assigned = i == 32 ? ~Mask{0} : (Mask{1} << i) - 1;
    for (const auto& x : s) {
      const Mask overlap = c.support() & x.support();
      if (overlap == 0) continue;
      const Mask agree = (c.plus_mask() & x.plus_mask()) | (c.minus_mask() & x.minus_mask());
      const Mask oppose = (c.plus_mask() & x.minus_mask()) | (c.minus_mask() & x.plus_mask());
      if (agree != 0 && oppose != 0) continue;
      // Still missing an agreeing or opposing coordinate: fatal once x has no free support left.
      if ((x.support() & ~assigned) == 0) return true;
    }
    if (i == n) return visit(static_cast<const SignVector&>(c));
    for (Sign sg : {Sign::Zero, Sign::Plus, Sign::Minus}) {
      c.set(i, sg);
      if (!self(self, i + 1)) {
        c.set(i, Sign::Zero);
        return false;
      }
    }
    c.set(i, Sign::Zero);
    return true;
  };
  rec(rec, 0);
}

/// S^⊥ = {c : c ⊥ x for every x in S}.
inline SignVectorSet set_perp(const SignVectorSet& s) {
  std::vector<SignVector> out;
  for_each_perp_vector(s.ambient(), s.items(), [&](const SignVector& c) {
    out.push_back(c);
    return true;
  });
  return SignVectorSet(s.ambient(), std::move(out));
}

/// m x n grid over {+,0,-}.
class SignPattern {
 public:
  SignPattern() = default;
  SignPattern(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Sign::Zero) {}

  static SignPattern from_strings(const std::vector<std::string>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    SignPattern p(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("SignPattern: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) {
        const auto s = sign_from_char(rows[i][j]);
        if (!s) throw std::invalid_argument("SignPattern: bad character '" + std::string(1, rows[i][j]) + "'");
        p(i, j) = *s;
      }
    }
    return p;
  }

  static SignPattern from_rows(const std::vector<SignVector>& rows, std::size_t cols) {
    SignPattern p(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("SignPattern: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) p(i, j) = rows[i][j];
    }
    return p;
  }

  static SignPattern identity(std::size_t n) {
    SignPattern p(n, n);
    for (std::size_t i = 0; i < n; ++i) p(i, i) = Sign::Plus;
    return p;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Sign& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Sign operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  SignVector row(std::size_t i) const {
    SignVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v.set(j, (*this)(i, j));
    return v;
  }
  SignVector column(std::size_t j) const {
    SignVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.set(i, (*this)(i, j));
    return v;
  }
  std::vector<SignVector> row_vectors() const {
    std::vector<SignVector> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  SignPattern transpose() const {
    SignPattern t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Sign s) { return s == Sign::Zero; });
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out(rows_, std::string(cols_, '0'));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = to_char((*this)(i, j));
    return out;
  }

  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Sign> data_;
};

inline SignPattern sign_of(const RationalMatrix& m) {
  SignPattern p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = sign_of(m(i, j));
  return p;
}

/// Block-diagonal direct sum.
inline SignPattern direct_sum(const SignPattern& a, const SignPattern& b) {
  SignPattern out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

/// Where an original line ended up: `sign` times line `index` of the condensed
/// pattern, or dropped as a zero line (sign Zero).
struct LineImage {
  std::size_t index = 0;
  Sign sign = Sign::Zero;
  friend bool operator==(const LineImage&, const LineImage&) = default;
};

struct Condensation {
  SignPattern pattern;
  std::vector<LineImage> row_map;
  std::vector<LineImage> col_map;
};

namespace detail {

// One pass over rows: drop zero rows and rows equal or opposite to an earlier kept row.
inline bool condense_rows(SignPattern& p, std::vector<LineImage>& row_map) {
  std::vector<std::size_t> kept;
  std::vector<LineImage> image(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < p.cols() && zero; ++j) zero = p(i, j) == Sign::Zero;
    if (zero) {
      image[i] = {0, Sign::Zero};
      continue;
    }
    bool matched = false;
    for (std::size_t k = 0; k < kept.size() && !matched; ++k) {
      bool same = true, opposite = true;
      for (std::size_t j = 0; j < p.cols(); ++j) {
        same = same && p(i, j) == p(kept[k], j);
        opposite = opposite && p(i, j) == negate(p(kept[k], j));
      }
      if (same || opposite) {
        image[i] = {k, same ? Sign::Plus : Sign::Minus};
        matched = true;
      }
    }
    if (!matched) {
      image[i] = {kept.size(), Sign::Plus};
      kept.push_back(i);
    }
  }
  if (kept.size() == p.rows()) return false;
  SignPattern next(kept.size(), p.cols());
  for (std::size_t k = 0; k < kept.size(); ++k)
    for (std::size_t j = 0; j < p.cols(); ++j) next(k, j) = p(kept[k], j);
  for (auto& img : row_map)
    if (img.sign != Sign::Zero) img = {image[img.index].index, multiply(img.sign, image[img.index].sign)};
  p = std::move(next);
  return true;
}

}  // namespace detail

/// Removes zero lines and lines equal or opposite to an earlier line, rows before
/// columns, until nothing changes. Keeps first occurrences in order.
inline Condensation condense(const SignPattern& a) {
  Condensation c{a, {}, {}};
  for (std::size_t i = 0; i < a.rows(); ++i) c.row_map.push_back({i, Sign::Plus});
  for (std::size_t j = 0; j < a.cols(); ++j) c.col_map.push_back({j, Sign::Plus});
  bool changed = true;
  while (changed) {
    changed = detail::condense_rows(c.pattern, c.row_map);
    SignPattern t = c.pattern.transpose();
    if (detail::condense_rows(t, c.col_map)) {
      changed = true;
      c.pattern = t.transpose();
    }
  }
  return c;
}

/// Maximum matching between rows and columns over nonzero entries (term rank).
inline std::vector<std::pair<std::size_t, std::size_t>> max_rank_matching(const SignPattern& a) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_of_col(a.cols(), none);
  std::vector<char> seen;
  auto augment = [&](auto&& self, std::size_t r) -> bool {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c) == Sign::Zero || seen[c]) continue;
      seen[c] = 1;
      if (match_of_col[c] == none || self(self, match_of_col[c])) {
        match_of_col[c] = r;
        return true;
      }
    }
    return false;
  };
  for (std::size_t r = 0; r < a.rows(); ++r) {
    seen.assign(a.cols(), 0);
    augment(augment, r);
  }
  std::vector<std::pair<std::size_t, std::size_t>> matching;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (match_of_col[c] != none) matching.emplace_back(match_of_col[c], c);
  std::sort(matching.begin(), matching.end());
  return matching;
}

inline std::size_t max_rank(const SignPattern& a) { return max_rank_matching(a).size(); }

}  // namespace signrank
