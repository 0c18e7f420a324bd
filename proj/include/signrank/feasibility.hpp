#pragma once

#include "signrank/matrix.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace signrank {

namespace detail {

// coeffs . y >= rhs
struct Inequality {
  RationalVector coeffs;
  Rational rhs;
};

// Positive rescaling to a primitive integer row so duplicates compare equal.
inline void normalize(Inequality& c) {
  BigInt den = 1;
  for (const auto& x : c.coeffs) den = lcm(den, denominator_of(x));
  den = lcm(den, denominator_of(c.rhs));
  BigInt g = 0;
  for (const auto& x : c.coeffs) g = gcd(g, abs(numerator_of(x) * (den / denominator_of(x))));
  if (g == 0) return;
  const Rational scale(den, g);
  for (auto& x : c.coeffs) x *= scale;
  c.rhs *= scale;
}

inline bool coeffs_less(const Inequality& a, const Inequality& b) {
  return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(), b.coeffs.end());
}

// Keeps only the tightest constraint per coefficient row. Returns false if some
// constraint reads 0 >= positive.
inline bool tidy(std::vector<Inequality>& system) {
  std::vector<Inequality> kept;
  kept.reserve(system.size());
  for (auto& c : system) {
    const bool trivial = std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Rational& x) { return x.is_zero(); });
    if (trivial) {
      if (c.rhs > 0) return false;
      continue;
    }
    normalize(c);
    kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end(), [](const Inequality& a, const Inequality& b) {
    if (coeffs_less(a, b)) return true;
    if (coeffs_less(b, a)) return false;
    return a.rhs > b.rhs;
  });
  kept.erase(std::unique(kept.begin(), kept.end(),
                         [](const Inequality& a, const Inequality& b) { return a.coeffs == b.coeffs; }),
             kept.end());
  system = std::move(kept);
  return true;
}

// Fourier-Motzkin on {coeffs . y >= rhs}. Returns a feasible point, picking the
// midpoint of each variable's feasible interval during back-substitution.
inline std::optional<RationalVector> fourier_motzkin(std::vector<Inequality> system, std::size_t vars) {
  // stages[j] holds the system over variables 0..j (before eliminating j).
  std::vector<std::vector<Inequality>> stages(vars);
  if (!tidy(system)) return std::nullopt;
  for (std::size_t j = vars; j-- > 0;) {
    stages[j] = system;
    std::vector<Inequality> lower, upper, next;
    for (auto& c : system) {
      const int s = c.coeffs[j].sign();
      if (s > 0) lower.push_back(c);
      else if (s < 0) upper.push_back(c);
      else next.push_back(c);
    }
    for (const auto& lo : lower)
      for (const auto& up : upper) {
        // lo: a y_j + ... >= r1 (a > 0); up: -b y_j + ... >= r2 (b > 0)
        const Rational a = lo.coeffs[j];
        const Rational b = -up.coeffs[j];
        Inequality combined{RationalVector(vars), b * lo.rhs + a * up.rhs};
        for (std::size_t v = 0; v < j; ++v) combined.coeffs[v] = b * lo.coeffs[v] + a * up.coeffs[v];
        next.push_back(std::move(combined));
      }
    for (auto& c : next) c.coeffs[j] = 0;
    if (!tidy(next)) return std::nullopt;
    system = std::move(next);
  }
  // All variables eliminated; tidy() has already rejected 0 >= positive.
  RationalVector y(vars);
  for (std::size_t j = 0; j < vars; ++j) {
    std::optional<Rational> lo, hi;
    for (const auto& c : stages[j]) {
      const int s = c.coeffs[j].sign();
      if (s == 0) continue;
      Rational rest = c.rhs;
      for (std::size_t v = 0; v < j; ++v)
        if (!c.coeffs[v].is_zero()) rest -= c.coeffs[v] * y[v];
      const Rational bound = rest / c.coeffs[j];
      if (s > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi) {
      if (*lo > *hi) throw std::logic_error("fourier_motzkin: empty interval during back-substitution");
      y[j] = (*lo + *hi) / 2;
    } else if (lo) {
      y[j] = *lo;
    } else if (hi) {
      y[j] = *hi;
    }
  }
  return y;
}

}  // namespace detail

/// Finds x = param * y with a.x >= 1 for every positive row. `param` columns span
/// the solution space of whatever equalities the caller has already imposed.
inline std::optional<RationalVector> strict_feasibility_in_span(const RationalMatrix& param,
                                                                std::span<const RationalVector> positives) {
  const std::size_t k = param.rows();
  const std::size_t d = param.cols();
  std::vector<detail::Inequality> system;
  system.reserve(positives.size());
  for (const auto& a : positives) {
    if (a.size() != k) throw std::invalid_argument("strict_feasibility: row length mismatch");
    detail::Inequality c{RationalVector(d), 1};
    for (std::size_t v = 0; v < d; ++v)
      for (std::size_t i = 0; i < k; ++i)
        if (!a[i].is_zero() && !param(i, v).is_zero()) c.coeffs[v] += a[i] * param(i, v);
    system.push_back(std::move(c));
  }
  auto y = detail::fourier_motzkin(std::move(system), d);
  if (!y) return std::nullopt;
  return param * *y;
}

/// Basis (as columns) of {x : a.x = 0 for every row a}.
inline RationalMatrix equality_parametrization(std::span<const RationalVector> equalities, std::size_t k) {
  for (const auto& r : equalities)
    if (r.size() != k) throw std::invalid_argument("strict_feasibility: row length mismatch");
  if (equalities.empty()) return RationalMatrix::identity(k);
  return nullspace_basis(RationalMatrix::from_rows({equalities.begin(), equalities.end()}, k)).basis();
}

/// Finds a rational x with a.x = 0 for every equality row and a.x >= 1 for every
/// positive row, or reports infeasibility. All rows must have length k.
inline std::optional<RationalVector> strict_feasibility(std::span<const RationalVector> equalities,
                                                        std::span<const RationalVector> positives, std::size_t k) {
  return strict_feasibility_in_span(equality_parametrization(equalities, k), positives);
}

inline std::optional<RationalVector> strict_feasibility(const std::vector<RationalVector>& equalities,
                                                        const std::vector<RationalVector>& positives, std::size_t k) {
  return strict_feasibility(std::span<const RationalVector>(equalities), std::span<const RationalVector>(positives), k);
}

}  // namespace signrank
