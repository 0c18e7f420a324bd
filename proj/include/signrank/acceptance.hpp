#pragma once

#include "signrank/extremal.hpp"
#include "signrank/minrank.hpp"
#include "signrank/parallel.hpp"
#include "signrank/realize.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace signrank {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 0;
  /// Multiplies every sample count (200 subspaces per cell, 1000 4x4 patterns, ...);
  /// 1.0 is the full suite.
  double scale = 1.0;
  /// Swappable so the suite itself can be mutation-tested.
  std::function<DualityReport(const RationalSubspace&)> duality = verify_duality;
};

/// Tallies every sign set enumerated by the suite: negation-closed, contains the
/// zero vector, odd cardinality.
class SignSetAudit {
 public:
  void check(const SignVectorSet& s) {
    const bool ok = s.negation_closed() && s.contains(SignVector(s.ambient())) && s.size() % 2 == 1;
    ++checked_;
    if (!ok) ++failed_;
  }
  void check_count(std::uint64_t count) {
    ++checked_;
    if (count % 2 == 0) ++failed_;
  }
  std::size_t checked() const { return checked_; }
  std::size_t failed() const { return failed_; }

 private:
  std::atomic<std::size_t> checked_{0};
  std::atomic<std::size_t> failed_{0};
};

namespace detail {

inline std::size_t scaled(std::size_t count, double scale) {
  const auto v = static_cast<std::size_t>(static_cast<double>(count) * scale + 0.5);
  return std::max<std::size_t>(1, v);
}

inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t x = seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL);
  x ^= x >> 31;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  return x;
}

// All sign sets of genuinely 2-dimensional subspaces of R^n, one per type.
inline std::vector<SignVectorSet> rank2_sign_sets(std::size_t n) {
  std::vector<SignVectorSet> sets;
  for_each_rank2_type(
      n,
      [&](const Rank2Type& t) {
        sets.push_back(sign_set_of_type(t));
        return true;
      },
      2);
  return sets;
}

// mr(A) <= 2 iff the rows lie in sign(L) for one 2-dim L (n >= 2).
inline bool oracle_mr_le_2(const SignPattern& a, const std::vector<SignVectorSet>& sets) {
  const auto rows = a.row_vectors();
  for (const auto& s : sets)
    if (std::all_of(rows.begin(), rows.end(), [&](const SignVector& r) { return s.contains(r); })) return true;
  return false;
}

// mr(A) <= 1 iff all nonzero rows agree up to negation.
inline bool oracle_mr_le_1(const SignPattern& a) {
  std::optional<SignVector> first;
  for (const auto& r : a.row_vectors()) {
    if (r.is_zero()) continue;
    if (!first) first = r;
    else if (!(r == *first) && !(r == first->negated())) return false;
  }
  return true;
}

// mr(A) = n iff no nonzero x in {+,-,0}^n is orthogonal to every row; checked
// against all 3^n candidates.
inline bool oracle_l_matrix(const SignPattern& a) {
  const auto rows = a.row_vectors();
  for (const auto& x : SignVectorSet::all(a.cols())) {
    if (x.is_zero()) continue;
    if (std::all_of(rows.begin(), rows.end(), [&](const SignVector& r) { return orthogonal(r, x); })) return false;
  }
  return true;
}

inline std::string format_rows(const SignPattern& a) {
  std::string s;
  for (const auto& row : a.to_strings()) s += (s.empty() ? "" : "/") + row;
  return s;
}

inline SignPattern pattern_from_index(std::size_t index, std::size_t rows, std::size_t cols) {
  SignPattern p(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      p(i, j) = static_cast<Sign>(index % 3);
      index /= 3;
    }
  return p;
}

inline bool audit_subspace(const RationalSubspace& v, SignSetAudit& audit) {
  const auto signs = sign_vectors(v).signs;
  audit.check(signs);
  return true;
}

class Failures {
 public:
  void add(const std::string& what) {
    std::lock_guard lock(mutex_);
    if (messages_.size() < 3) messages_.push_back(what);
    ++count_;
  }
  std::size_t count() const { return count_; }
  std::string summary() const {
    std::string s;
    for (const auto& m : messages_) s += (s.empty() ? "" : "; ") + m;
    return s;
  }

 private:
  mutable std::mutex mutex_;
  std::vector<std::string> messages_;
  std::size_t count_ = 0;
};

}  // namespace detail

inline CriterionResult criterion_duality(const AcceptanceOptions& o, SignSetAudit& audit) {
  CriterionResult r{1, "duality sign(L)^perp = sign(L^perp), 200 random subspaces per (k,n), n <= 6", false, {}, 0};
  const std::size_t samples = detail::scaled(200, o.scale);
  struct Cell {
    std::size_t n, k;
  };
  std::vector<Cell> cells;
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t k = 1; k < n; ++k) cells.push_back({n, k});
  detail::Failures failures;
  parallel_map(cells.size() * samples, [&](std::size_t idx) {
    const auto& cell = cells[idx / samples];
    Rng rng(detail::sub_seed(o.seed, 1, idx));
    const auto l = random_subspace(rng, cell.n, cell.k);
    const auto rep = o.duality(l);
    audit.check(rep.complement_signs);
    audit.check(rep.perp_of_signs);
    if (!rep.holds) failures.add("n=" + std::to_string(cell.n) + " k=" + std::to_string(cell.k));
    return true;
  });
  const std::size_t total = cells.size() * samples;
  r.pass = failures.count() == 0;
  r.detail = std::to_string(total - failures.count()) + "/" + std::to_string(total) + " verified over " +
             std::to_string(cells.size()) + " cells";
  if (!r.pass) r.detail += " (" + failures.summary() + ")";
  return r;
}

inline CriterionResult criterion_s2(const AcceptanceOptions&, SignSetAudit& audit) {
  CriterionResult r{2, "S_{2,n} = 4n+1: exhaustive for n in 2..6, [T1;T2] witness for n <= 8", false, {}, 0};
  bool ok = true;
  std::ostringstream d;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto rep = s2_exhaustive_max(n);
    for (auto c : rep.achieved) audit.check_count(c);
    ok = ok && rep.holds && rep.count == 4 * n + 1;
    d << "max(" << n << ")=" << rep.count << " ";
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto rep = s2_witness_count(n);
    detail::audit_subspace(RationalSubspace(*rep.witness_basis), audit);
    ok = ok && rep.holds && rep.count == 4 * n + 1;
    d << "witness(" << n << ")=" << rep.count << (n < 8 ? " " : "");
  }
  r.pass = ok;
  r.detail = d.str();
  return r;
}

inline CriterionResult criterion_spectrum3(const AcceptanceOptions&, SignSetAudit& audit) {
  CriterionResult r{3, "2-dim sign set cardinalities in R^3 are exactly {9, 13}", false, {}, 0};
  std::set<std::size_t> sizes;
  for (const auto& s : detail::rank2_sign_sets(3)) {
    audit.check(s);
    sizes.insert(s.size());
  }
  r.pass = sizes == std::set<std::size_t>{9, 13};
  std::string list;
  for (auto s : sizes) list += (list.empty() ? "" : ", ") + std::to_string(s);
  r.detail = "{" + list + "}";
  return r;
}

inline CriterionResult criterion_smin(const AcceptanceOptions& o, SignSetAudit& audit) {
  CriterionResult r{4, "s_{k,n} = 3^k, S_{n,n} = 3^n, random k-dim counts >= 3^k, k <= n <= 6", false, {}, 0};
  const std::size_t samples = detail::scaled(200, o.scale);
  struct Cell {
    std::size_t n, k;
  };
  std::vector<Cell> cells;
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 1; k <= n; ++k) cells.push_back({n, k});
  detail::Failures failures;
  parallel_map(cells.size(), [&](std::size_t c) {
    const auto [n, k] = cells[c];
    const auto rep = s_min_witness(k, n, 0);
    audit.check_count(rep.count);
    if (!rep.holds || rep.count != pow3(k)) failures.add("coordinate k=" + std::to_string(k) + " n=" + std::to_string(n));
    Rng rng(detail::sub_seed(o.seed, 4, c));
    for (std::size_t s = 0; s < samples; ++s) {
      const auto signs = sign_vectors(random_subspace(rng, n, k)).signs;
      audit.check(signs);
      if (signs.size() < pow3(k)) failures.add("random k=" + std::to_string(k) + " n=" + std::to_string(n));
      if (k == n && signs.size() != pow3(n)) failures.add("full n=" + std::to_string(n));
    }
    return true;
  });
  r.pass = failures.count() == 0;
  r.detail = std::to_string(cells.size()) + " cells, " + std::to_string(samples) + " random subspaces each";
  if (!r.pass) r.detail += " (" + failures.summary() + ")";
  return r;
}

inline CriterionResult criterion_hyperplane(const AcceptanceOptions& o, SignSetAudit& audit) {
  CriterionResult r{5, "S_{n-1,n} = 3^n - 2(2^n - 1): 13/51/181 and random hyperplanes never exceed it", false, {}, 0};
  const std::size_t samples = detail::scaled(200, o.scale);
  const std::uint64_t expected[] = {13, 51, 181};
  bool ok = true;
  std::ostringstream d;
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto rep = s_hyperplane_max(n, samples, detail::sub_seed(o.seed, 5, n));
    detail::audit_subspace(RationalSubspace(*rep.witness_basis), audit);
    ok = ok && rep.holds && rep.count == expected[n - 3];
    d << "n=" << n << ": " << rep.count << (n < 5 ? ", " : "");
  }
  r.pass = ok;
  r.detail = d.str();
  return r;
}

inline CriterionResult criterion_perp_formula(const AcceptanceOptions&, SignSetAudit& audit) {
  CriterionResult r{6, "|x^perp| = 3^(n-t)(3^t - 2(2^t - 1)) for every x, n <= 6", false, {}, 0};
  std::size_t checked = 0, bad = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto all = SignVectorSet::all(n);
    for (const auto& x : all) {
      std::size_t brute = 0;
      for (const auto& c : all) brute += orthogonal(c, x) ? 1 : 0;
      const auto perp = set_perp(SignVectorSet(n, {x}));
      audit.check(perp);
      const auto f = perp_count_formula(n, x.nonzeros());
      ++checked;
      if (brute != f || perp.size() != f) ++bad;
    }
  }
  r.pass = bad == 0;
  r.detail = std::to_string(checked - bad) + "/" + std::to_string(checked) + " sign vectors match";
  return r;
}

inline CriterionResult criterion_mr2(const AcceptanceOptions& o, SignSetAudit& audit) {
  CriterionResult r{7, "mr <= 2 characterization vs rank-2 type oracle: all 3x3, 1000 seeded 4x4", false, {}, 0};
  const auto sets3 = detail::rank2_sign_sets(3);
  const auto sets4 = detail::rank2_sign_sets(4);
  for (const auto& s : sets3) audit.check(s);
  for (const auto& s : sets4) audit.check(s);
  detail::Failures failures;
  std::atomic<std::size_t> positives{0};
  auto check = [&](const SignPattern& a, const std::vector<SignVectorSet>& sets) {
    const bool expected = detail::oracle_mr_le_2(a, sets) && !detail::oracle_mr_le_1(a);
    const auto cert = mr_le_2(a);
    if (cert.found() != expected) {
      failures.add("disagreement on " + detail::format_rows(a));
      return;
    }
    if (!cert) return;
    ++positives;
    if (!verify_mr2_certificate(a, *cert.value)) failures.add("certificate rejected on " + detail::format_rows(a));
    const auto m = realize_rank2(a, *cert.value);
    if (!(sign_of(m) == a) || rank(m) != 2) failures.add("realization wrong on " + detail::format_rows(a));
  };
  const std::size_t all3 = 19683;
  parallel_map(all3, [&](std::size_t i) {
    check(detail::pattern_from_index(i, 3, 3), sets3);
    return true;
  });
  const std::size_t n4 = detail::scaled(1000, o.scale);
  parallel_map(n4, [&](std::size_t i) {
    Rng rng(detail::sub_seed(o.seed, 7, i));
    // Half uniform, half sign(U V) with inner dimension 2 so both answers occur.
    const auto a = i % 2 == 0 ? random_pattern(rng, 4, 4)
                              : sign_of(random_integer_matrix(rng, 4, 2, -3, 3) * random_integer_matrix(rng, 2, 4, -3, 3));
    check(a, sets4);
    return true;
  });
  r.pass = failures.count() == 0;
  r.detail = std::to_string(all3 + n4) + " patterns, " + std::to_string(positives.load()) + " with mr = 2";
  if (!r.pass) r.detail += " (" + failures.summary() + ")";
  return r;
}

inline CriterionResult criterion_min_rank(const AcceptanceOptions& o, SignSetAudit& audit) {
  CriterionResult r{8, "exact min_rank: all 3x3, 500 seeded up to 5x5, Example pattern, [T1;T2], identity", false, {}, 0};
  const auto sets3 = detail::rank2_sign_sets(3);
  detail::Failures failures;
  auto expect_exact = [&](const SignPattern& a, std::optional<std::size_t> value, const std::string& label) {
    const auto b = min_rank(a);
    if (!b.exact()) failures.add(label + ": bracket [" + std::to_string(b.lower) + "," + std::to_string(b.upper) + "]");
    else if (value && b.lower != *value) failures.add(label + ": mr " + std::to_string(b.lower));
    if (!verify_bracket(a, b)) failures.add(label + ": certificates do not verify");
    for (const auto& e : b.certificates)
      if (const auto* t = std::get_if<TypeEvidence>(&e)) audit.check(sign_set_of_type(t->type));
    return b;
  };

  parallel_map(std::size_t{19683}, [&](std::size_t i) {
    const auto a = detail::pattern_from_index(i, 3, 3);
    std::size_t mr;
    if (a.is_zero()) mr = 0;
    else if (detail::oracle_mr_le_1(a)) mr = 1;
    else if (detail::oracle_mr_le_2(a, sets3)) mr = 2;
    else mr = 3;
    if ((mr == 3) != detail::oracle_l_matrix(a)) failures.add("3x3 oracle inconsistent");
    expect_exact(a, mr, "3x3 " + detail::format_rows(a));
    return true;
  });

  const std::size_t seeded = detail::scaled(500, o.scale);
  parallel_map(seeded, [&](std::size_t i) {
    Rng rng(detail::sub_seed(o.seed, 8, i));
    const auto m = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    SignPattern a;
    std::optional<std::size_t> bound;
    if (i % 2 == 0) {
      a = random_pattern(rng, m, n);
    } else {
      const auto inner = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(std::min(m, n))));
      a = sign_of(random_integer_matrix(rng, m, inner, -3, 3) * random_integer_matrix(rng, inner, n, -3, 3));
      bound = inner;
    }
    const std::string label = std::to_string(m) + "x" + std::to_string(n) + " " + detail::format_rows(a);
    const auto b = expect_exact(a, std::nullopt, label);
    if (bound && b.upper > *bound) failures.add(label + ": exceeds planted rank");
    const auto bt = min_rank(a.transpose());
    if (bt.lower != b.lower || bt.upper != b.upper) failures.add(label + ": not transpose invariant");
    return true;
  });

  expect_exact(SignPattern::from_strings({"+++", "0++"}), 2, "example");
  for (std::size_t n = 2; n <= 8; ++n) expect_exact(t1t2_pattern(n), 2, "[T1;T2](" + std::to_string(n) + ")");
  for (std::size_t n = 1; n <= 8; ++n) expect_exact(SignPattern::identity(n), n, "I_" + std::to_string(n));

  r.pass = failures.count() == 0;
  r.detail = std::to_string(19683 + seeded + 1 + 7 + 8) + " patterns";
  if (!r.pass) r.detail += " (" + std::to_string(failures.count()) + " failures: " + failures.summary() + ")";
  return r;
}

inline CriterionResult criterion_corank2(const AcceptanceOptions& o, SignSetAudit& audit) {
  CriterionResult r{9, "rank <= n-2 rational realization of 50 planted sign(UV), n <= 6, m <= 12", false, {}, 0};
  const std::size_t instances = detail::scaled(50, o.scale);
  detail::Failures failures;
  parallel_map(instances, [&](std::size_t i) {
    Rng rng(detail::sub_seed(o.seed, 9, i));
    const auto n = static_cast<std::size_t>(rng.uniform(3, 6));
    const auto m = static_cast<std::size_t>(rng.uniform(1, 12));
    const auto a = sign_of(random_rational_matrix(rng, n, n - 2) * random_rational_matrix(rng, n - 2, m));
    const std::string label = "instance " + std::to_string(i);
    const auto out = realize_corank2(a);
    if (!out.result) {
      failures.add(label + ": " + std::string(to_string(out.status)));
      return true;
    }
    const auto& res = *out.result;
    if (!(sign_of(res.matrix) == a) || rank(res.matrix) > n - 2 || rank(res.matrix) != res.claimed_rank)
      failures.add(label + ": realization check failed");
    const auto k_signs = sign_vectors(res.complement).signs;
    const auto type_signs = sign_set_of_type(res.type);
    audit.check(k_signs);
    audit.check(type_signs);
    if (!(k_signs == set_perp(type_signs))) failures.add(label + ": complement signs differ from type perp");
    return true;
  });
  r.pass = failures.count() == 0;
  r.detail = std::to_string(instances - failures.count()) + "/" + std::to_string(instances) + " realized";
  if (!r.pass) r.detail += " (" + failures.summary() + ")";
  return r;
}

inline CriterionResult criterion_rationalize(const AcceptanceOptions& o, SignSetAudit& audit) {
  CriterionResult r{10, "rationalize B C = E for 25 planted instances; infeasible example is definitive", false, {}, 0};
  const std::size_t instances = detail::scaled(25, o.scale);
  detail::Failures failures;
  parallel_map(instances, [&](std::size_t i) {
    Rng rng(detail::sub_seed(o.seed, 10, i));
    const auto p = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const bool two_rows = i % 2 == 1;
    RationalMatrix b, c;
    if (two_rows) {
      b = random_integer_matrix(rng, 2, n, -2, 2);
      c = random_integer_matrix(rng, n, p, -2, 2);
    } else {
      b = random_integer_matrix(rng, p, n, -2, 2);
      c = random_integer_matrix(rng, n, 2, -2, 2);
    }
    const auto sb = sign_of(b), sc = sign_of(c), se = sign_of(b * c);
    const std::string label = "instance " + std::to_string(i);
    const auto out = rationalize_equation(sb, sc, se);
    if (!out.solution) {
      failures.add(label + ": " + std::string(to_string(out.status)));
      return true;
    }
    const auto& s = *out.solution;
    if (!(sign_of(s.b) == sb) || !(sign_of(s.c) == sc) || !(sign_of(s.e) == se) || !(s.b * s.c == s.e))
      failures.add(label + ": solution check failed");
    detail::audit_subspace(RationalSubspace::column_space(s.block.transpose()), audit);
    return true;
  });
  const auto infeasible =
      rationalize_equation(SignPattern::from_strings({"+"}), SignPattern::from_strings({"++"}), SignPattern::from_strings({"0+"}));
  const bool negative_ok = !infeasible.solution && infeasible.status == SearchStatus::Exhausted;
  if (!negative_ok) failures.add("infeasible example: " + std::string(to_string(infeasible.status)));
  r.pass = failures.count() == 0;
  r.detail = std::to_string(instances) + " planted, infeasible example " + std::string(to_string(infeasible.status));
  if (!r.pass) r.detail += " (" + failures.summary() + ")";
  return r;
}

inline CriterionResult criterion_s3(const AcceptanceOptions&, SignSetAudit& audit) {
  CriterionResult r{11, "S_{3,n} >= 3(4n - 3) for n in {3, 4, 5}", false, {}, 0};
  bool ok = true;
  std::ostringstream d;
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto rep = s3_lower_witness(n);
    detail::audit_subspace(RationalSubspace(*rep.witness_basis), audit);
    ok = ok && rep.holds && rep.count >= 3 * (4 * n - 3);
    d << "n=" << n << ": " << rep.count << " >= " << 3 * (4 * n - 3) << (n < 5 ? ", " : "");
  }
  r.pass = ok;
  r.detail = d.str();
  return r;
}

/// Runs criteria 1-11, then the sign-set audit over everything they enumerated
/// as criterion 12. `on_result` sees each result as soon as it is ready.
inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {},
                                                   const std::function<void(const CriterionResult&)>& on_result = {}) {
  using Criterion = CriterionResult (*)(const AcceptanceOptions&, SignSetAudit&);
  const Criterion criteria[] = {criterion_duality,     criterion_s2,       criterion_spectrum3, criterion_smin,
                                criterion_hyperplane,  criterion_perp_formula, criterion_mr2,   criterion_min_rank,
                                criterion_corank2,     criterion_rationalize,  criterion_s3};
  SignSetAudit audit;
  std::vector<CriterionResult> results;
  for (auto run : criteria) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = run(options, audit);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
      r.id = static_cast<int>(results.size()) + 1;
      r.name = "criterion " + std::to_string(r.id);
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  CriterionResult audit_result{12, "every enumerated sign set is negation-closed, contains 0, has odd size", false, {}, 0};
  audit_result.pass = audit.failed() == 0 && audit.checked() > 0;
  audit_result.detail =
      std::to_string(audit.checked() - audit.failed()) + "/" + std::to_string(audit.checked()) + " sets pass";
  if (on_result) on_result(audit_result);
  results.push_back(std::move(audit_result));
  return results;
}

inline std::string format_result_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " :: " << r.detail;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << " (" << r.seconds << "s)";
  return os.str();
}

}  // namespace signrank
