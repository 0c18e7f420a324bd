#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace signrank {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction in canonical form: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
///
/// Values whose numerator and denominator fit in 63 bits are stored inline and
/// combined with 128-bit intermediates; anything larger lives in a cpp_int pair.
/// Results are demoted back to the inline form whenever they fit.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : Rational(static_cast<long long>(v)) {}  // NOLINT
  Rational(long long v) {  // NOLINT
    if (v == INT64_MIN) assign_big(BigInt(v), BigInt(1));
    else num_ = v;
  }
  Rational(const BigInt& v) { assign_big(v, BigInt(1)); }  // NOLINT
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    assign_big(num, den);
  }
  Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

  Rational(const Rational& o) : num_(o.num_), den_(o.den_), big_(o.big_ ? std::make_unique<Big>(*o.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<Big>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  int sign() const {
    if (big_) return big_->num.sign();
    return (num_ > 0) - (num_ < 0);
  }
  bool is_zero() const { return !big_ && num_ == 0; }

  BigInt numerator() const { return big_ ? big_->num : BigInt(num_); }
  BigInt denominator() const { return big_ ? big_->den : BigInt(den_); }

  std::string str() const {
    if (big_) return big_->den == 1 ? big_->num.str() : big_->num.str() + "/" + big_->den.str();
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const {
    Rational r = *this;
    if (r.big_) r.big_->num = -r.big_->num;
    else r.num_ = -r.num_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) return from_wide(I128(a.num_) + b.num_, 1);
      return from_wide(I128(a.num_) * b.den_ + I128(b.num_) * a.den_, I128(a.den_) * b.den_);
    }
    return from_big(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                    a.denominator() * b.denominator());
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0 || b.num_ == 0) return Rational();
      const std::int64_t g1 = std::gcd(a.num_, b.den_);
      const std::int64_t g2 = std::gcd(b.num_, a.den_);
      const I128 num = I128(a.num_ / g1) * (b.num_ / g2);
      const I128 den = I128(a.den_ / g2) * (b.den_ / g1);
      if (fits(num) && fits(den)) return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den), Raw{});
      return from_big(to_big(num), to_big(den));
    }
    return from_big(a.numerator() * b.numerator(), a.denominator() * b.denominator());
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return a * b.reciprocal();
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    if (big_) return from_big(big_->den, big_->num);
    return num_ > 0 ? Rational(den_, num_, Raw{}) : Rational(-den_, -num_, Raw{});
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;  // both canonical
    return a.big_->num == b.big_->num && a.big_->den == b.big_->den;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == b.den_) return a.num_ <=> b.num_;
      const I128 l = I128(a.num_) * b.den_;
      const I128 r = I128(b.num_) * a.den_;
      return l < r ? std::strong_ordering::less : l > r ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    const BigInt l = a.numerator() * b.denominator();
    const BigInt r = b.numerator() * a.denominator();
    return l < r ? std::strong_ordering::less : l > r ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

 private:
  using I128 = __int128;
  struct Big {
    BigInt num;
    BigInt den;
  };
  struct Raw {};

  Rational(std::int64_t num, std::int64_t den, Raw) : num_(num), den_(den) {}

  static bool fits(I128 v) { return v >= -I128(INT64_MAX) && v <= I128(INT64_MAX); }

  static BigInt to_big(I128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    BigInt r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-r) : r;
  }

  static unsigned __int128 gcd_wide(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      if ((a >> 64) == 0 && (b >> 64) == 0)
        return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
      const unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  // den > 0
  static Rational from_wide(I128 num, I128 den) {
    if (num == 0) return Rational();
    const auto g = static_cast<I128>(gcd_wide(static_cast<unsigned __int128>(num < 0 ? -num : num),
                                              static_cast<unsigned __int128>(den)));
    num /= g;
    den /= g;
    if (fits(num) && fits(den)) return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den), Raw{});
    return from_big(to_big(num), to_big(den));
  }

  static Rational from_big(BigInt num, BigInt den) {
    Rational r;
    r.assign_big(std::move(num), std::move(den));
    return r;
  }

  void assign_big(BigInt num, BigInt den) {
    if (den.sign() < 0) {
      num = -num;
      den = -den;
    }
    const BigInt g = boost::multiprecision::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    static const BigInt limit = BigInt(INT64_MAX);
    if (abs(num) <= limit && den <= limit) {
      num_ = static_cast<std::int64_t>(num);
      den_ = static_cast<std::int64_t>(den);
      big_.reset();
    } else {
      num_ = 0;
      den_ = 1;
      big_ = std::make_unique<Big>(Big{std::move(num), std::move(den)});
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<Big> big_;
};

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<BigInt>;

inline BigInt numerator_of(const Rational& x) { return x.numerator(); }
inline BigInt denominator_of(const Rational& x) { return x.denominator(); }

inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const BigInt& x) { return x.str(); }

namespace detail {

inline bool parse_integer(std::string_view text, BigInt& out) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) return false;
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') return false;
    value *= 10;
    value += c - '0';
  }
  out = negative ? BigInt(-value) : value;
  return true;
}

}  // namespace detail

/// Parses "p" or "p/q" with an optional sign on p. Throws std::invalid_argument
/// on malformed text or a zero denominator.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  if (slash == std::string_view::npos) {
    if (!detail::parse_integer(text, num))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  } else {
    const auto den_text = text.substr(slash + 1);
    if (!detail::parse_integer(text.substr(0, slash), num) || den_text.empty() || den_text.front() == '+' ||
        den_text.front() == '-' || !detail::parse_integer(den_text, den))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

/// Smallest positive multiple of v with coprime integer entries. Zero maps to zero.
inline IntegerVector primitive_integer_vector(const RationalVector& v) {
  BigInt den = 1;
  for (const auto& x : v) den = lcm(den, x.denominator());
  IntegerVector out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const auto& x : v) {
    out.push_back(x.numerator() * (den / x.denominator()));
    g = gcd(g, abs(out.back()));
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

inline RationalVector to_rational(const IntegerVector& v) { return RationalVector(v.begin(), v.end()); }

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

}  // namespace signrank
