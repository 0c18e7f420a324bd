#include "signrank/signrank.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace signrank;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInconclusive = 2;

struct RunConfig {
  std::vector<std::string> inputs;
  std::string out;
  std::uint64_t seed = 0;
  std::int64_t budget_ms = 0;
  bool json = false;
  std::size_t random = 0;
  std::size_t n = 4;
  std::size_t k = 0;
  bool table = false;
  std::size_t samples = 20;
  double scale = 1.0;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Parse>
auto load(const std::string& path, Parse parse) {
  const auto text = read_text_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                     e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

SignPattern load_pattern(const std::string& path) { return load(path, parse_pattern); }
RationalMatrix load_matrix(const std::string& path) { return load(path, parse_matrix); }

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Writes a matrix and re-reads it; the file must parse back to the same sign pattern.
void write_matrix(const std::string& path, const RationalMatrix& m, const SignPattern& expected) {
  write_text_file(path, format_matrix(m));
  if (!(sign_of(load_matrix(path)) == expected)) throw std::logic_error("written matrix does not round-trip: " + path);
}

void emit_matrix(const RunConfig& cfg, const RationalMatrix& m, const SignPattern& expected) {
  if (cfg.out.empty()) std::cout << format_matrix(m);
  else write_matrix(cfg.out, m, expected);
}

std::string describe(const Evidence& e) {
  return std::visit(
      [](const auto& ev) -> std::string {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, MatchingEvidence>) {
          std::string s = "term rank matching:";
          for (auto [i, j] : ev.entries) s += " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
          return s;
        } else if constexpr (std::is_same_v<T, Mr2Certificate>) {
          std::string order;
          for (auto j : ev.column_order) order += (order.empty() ? "" : " ") + std::to_string(j + 1);
          return "monotone certificate: condensed " + std::to_string(ev.condensation.pattern.rows()) + "x" +
                 std::to_string(ev.condensation.pattern.cols()) + ", column order " + order;
        } else if constexpr (std::is_same_v<T, NullVectorEvidence>) {
          return "nonzero sign vector orthogonal to every row: " + ev.x.to_string();
        } else if constexpr (std::is_same_v<T, LMatrixEvidence>) {
          return "L-matrix: no nonzero sign vector is orthogonal to every row";
        } else if constexpr (std::is_same_v<T, NotRank2Evidence>) {
          return "no monotone certificate exists";
        } else if constexpr (std::is_same_v<T, TypeEvidence>) {
          return "rank-2 type with " + std::to_string(ev.type.classes.size()) +
                 " classes orthogonal to every row";
        } else if constexpr (std::is_same_v<T, NoTypeEvidence>) {
          return "no rank-2 type is orthogonal to every row";
        } else {
          return "rational realization of rank " + std::to_string(ev.rank);
        }
      },
      e);
}

int cmd_mr(const RunConfig& cfg) {
  const auto a = load_pattern(cfg.inputs.at(0));
  MinRankOptions options;
  options.budget = Budget::milliseconds(cfg.budget_ms);
  options.seed = cfg.seed;
  const auto b = min_rank(a, options);
  if (!cfg.out.empty()) {
    for (auto it = b.certificates.rbegin(); it != b.certificates.rend(); ++it)
      if (const auto* r = std::get_if<RealizationEvidence>(&*it); r && r->rank == b.upper) {
        write_matrix(cfg.out, r->matrix, a);
        break;
      }
  }
  if (cfg.json) {
    print_json(to_json(b));
  } else {
    if (b.exact()) std::cout << "mr = " << b.lower << " (exact)\n";
    else std::cout << "mr in [" << b.lower << ", " << b.upper << "] (bracket)\n";
    if (b.budget_exceeded) std::cout << "budget exceeded\n";
    for (const auto& e : b.certificates) std::cout << "  " << describe(e) << "\n";
  }
  return b.exact() ? kOk : kInconclusive;
}

int cmd_signs(const RunConfig& cfg) {
  const auto l = RationalSubspace::column_space(load_matrix(cfg.inputs.at(0)));
  const auto report = sign_vectors(l);
  if (cfg.json) {
    print_json(to_json(report));
    return kOk;
  }
  std::cout << "dim " << l.dim() << " in R^" << l.ambient_dim() << ": " << report.signs.size() << " sign vectors\n";
  for (const auto& s : report.signs) std::cout << s.to_string() << "\n";
  return kOk;
}

int cmd_duality(const RunConfig& cfg) {
  std::vector<RationalSubspace> subspaces;
  if (!cfg.inputs.empty()) {
    for (const auto& path : cfg.inputs) subspaces.push_back(RationalSubspace::column_space(load_matrix(path)));
  } else {
    if (cfg.random == 0) throw CLI::ValidationError("duality-check", "give matrix files or --random <count>");
    if (cfg.n < 2) throw CLI::ValidationError("--n", "must be at least 2");
    if (cfg.k >= cfg.n) throw CLI::ValidationError("--k", "must be below --n");
    Rng rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.random; ++i) {
      const auto k = cfg.k ? cfg.k : static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(cfg.n) - 1));
      subspaces.push_back(random_subspace(rng, cfg.n, k));
    }
  }
  const auto reports = parallel_map(subspaces.size(), [&](std::size_t i) { return verify_duality(subspaces[i]); });
  std::size_t ok = 0;
  Json items = Json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    ok += reports[i].holds;
    if (cfg.json) {
      Json d = Json::array();
      for (const auto& v : reports[i].discrepancy) d.push_back(v.to_string());
      items.push_back({{"dim", subspaces[i].dim()},
                       {"ambient", subspaces[i].ambient_dim()},
                       {"holds", reports[i].holds},
                       {"complement_count", reports[i].complement_signs.size()},
                       {"discrepancy", d}});
    }
  }
  if (cfg.json)
    print_json({{"schema", json_schema_version}, {"verified", ok}, {"total", reports.size()}, {"subspaces", items}});
  else
    std::cout << ok << "/" << reports.size() << " verified\n";
  return ok == reports.size() ? kOk : kInconclusive;
}

int cmd_perp(const RunConfig& cfg) {
  const auto a = load_pattern(cfg.inputs.at(0));
  const auto perp = set_perp(SignVectorSet(a.cols(), a.row_vectors()));
  if (cfg.json) {
    print_json({{"schema", json_schema_version}, {"ambient", a.cols()}, {"count", perp.size()}, {"perp", to_json(perp)}});
    return kOk;
  }
  std::cout << perp.size() << " sign vectors orthogonal to every row\n";
  for (const auto& v : perp) std::cout << v.to_string() << "\n";
  return kOk;
}

int cmd_condense(const RunConfig& cfg) {
  const auto a = load_pattern(cfg.inputs.at(0));
  const auto c = condense(a);
  if (cfg.json) {
    print_json({{"schema", json_schema_version},
                {"condensed", to_json(c.pattern)},
                {"row_map", to_json(c.row_map)},
                {"col_map", to_json(c.col_map)}});
    return kOk;
  }
  std::cout << format_pattern(c.pattern);
  return kOk;
}

int cmd_maxrank(const RunConfig& cfg) {
  const auto a = load_pattern(cfg.inputs.at(0));
  const auto m = max_rank_matching(a);
  if (cfg.json) {
    Json entries = Json::array();
    for (auto [i, j] : m) entries.push_back({i, j});
    print_json({{"schema", json_schema_version}, {"max_rank", m.size()}, {"matching", entries}});
    return kOk;
  }
  std::cout << "MR = " << m.size() << "\n";
  for (auto [i, j] : m) std::cout << "  (" << i + 1 << "," << j + 1 << ")\n";
  return kOk;
}

int cmd_realize2(const RunConfig& cfg) {
  const auto a = load_pattern(cfg.inputs.at(0));
  const auto cert = mr_le_2(a, Budget::milliseconds(cfg.budget_ms));
  if (!cert) {
    const bool budget = cert.status == SearchStatus::BudgetExceeded;
    std::cerr << (budget ? "budget exceeded\n" : "mr(A) is not 2\n");
    if (cfg.json) print_json({{"schema", json_schema_version}, {"status", std::string(to_string(cert.status))}});
    return kInconclusive;
  }
  const auto m = realize_rank2(a, *cert.value);
  emit_matrix(cfg, m, a);
  if (cfg.json) {
    print_json({{"schema", json_schema_version},
                {"status", "found"},
                {"rank", rank(m)},
                {"certificate", to_json(*cert.value)},
                {"matrix", to_json(m)}});
  }
  return kOk;
}

int cmd_realize_nm2(const RunConfig& cfg) {
  const auto a = load_pattern(cfg.inputs.at(0));
  const auto out = realize_corank2(a, Budget::milliseconds(cfg.budget_ms));
  if (!out.result) {
    std::cerr << (out.status == SearchStatus::BudgetExceeded ? "budget exceeded\n"
                                                            : "exhausted: no type admits A, mr(A) > n - 2\n");
    if (cfg.json) print_json({{"schema", json_schema_version}, {"status", std::string(to_string(out.status))}});
    return kInconclusive;
  }
  emit_matrix(cfg, out.result->matrix, a);
  if (cfg.json) {
    auto j = to_json(*out.result);
    j["status"] = "found";
    print_json(j);
  }
  return kOk;
}

int cmd_rationalize(const RunConfig& cfg) {
  if (cfg.inputs.size() != 3) throw CLI::ValidationError("rationalize", "needs three pattern files: B C E");
  const auto sb = load_pattern(cfg.inputs[0]);
  const auto sc = load_pattern(cfg.inputs[1]);
  const auto se = load_pattern(cfg.inputs[2]);
  EquationOutcome out;
  try {
    out = rationalize_equation(sb, sc, se, Budget::milliseconds(cfg.budget_ms));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (!out.solution) {
    std::cerr << (out.status == SearchStatus::BudgetExceeded ? "budget exceeded\n"
                                                            : "exhausted: no real solution exists\n");
    if (cfg.json) print_json({{"schema", json_schema_version}, {"status", std::string(to_string(out.status))}});
    return kInconclusive;
  }
  const auto& s = *out.solution;
  const bool product = s.b * s.c == s.e;
  const bool signs = sign_of(s.b) == sb && sign_of(s.c) == sc && sign_of(s.e) == se;
  if (!cfg.out.empty()) {
    write_matrix(cfg.out + ".B", s.b, sb);
    write_matrix(cfg.out + ".C", s.c, sc);
    write_matrix(cfg.out + ".E", s.e, se);
  }
  if (cfg.json) {
    print_json({{"schema", json_schema_version},
                {"status", "found"},
                {"B", to_json(s.b)},
                {"C", to_json(s.c)},
                {"E", to_json(s.e)},
                {"exact_product", product},
                {"signs_match", signs}});
  } else {
    std::cout << "B =\n" << format_matrix(s.b) << "C =\n" << format_matrix(s.c) << "E =\n" << format_matrix(s.e);
    std::cout << "B C = E exactly: " << (product ? "yes" : "no") << "\n";
    std::cout << "sign patterns match: " << (signs ? "yes" : "no") << "\n";
  }
  return product && signs ? kOk : kInconclusive;
}

std::vector<ExtremalReport> extremal_table(std::size_t samples, std::uint64_t seed) {
  std::vector<std::function<ExtremalReport()>> jobs;
  for (std::size_t n = 2; n <= 6; ++n) jobs.push_back([n] { return s2_exhaustive_max(n); });
  for (std::size_t n = 2; n <= 6; ++n) jobs.push_back([n] { return s2_witness_count(n); });
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 1; k <= n; ++k) jobs.push_back([=] { return s_min_witness(k, n, samples, seed); });
  for (std::size_t n = 2; n <= 6; ++n) jobs.push_back([=] { return s_hyperplane_max(n, samples, seed); });
  for (std::size_t n = 3; n <= 6; ++n) jobs.push_back([n] { return s3_lower_witness(n); });
  return parallel_map(jobs.size(), [&](std::size_t i) { return jobs[i](); });
}

int cmd_extremal(const RunConfig& cfg) {
  if (!cfg.table) throw CLI::ValidationError("extremal", "only --table is supported");
  const auto rows = extremal_table(cfg.samples, cfg.seed);
  bool all = true;
  for (const auto& r : rows) all = all && r.holds;
  if (cfg.json) {
    Json items = Json::array();
    for (const auto& r : rows) items.push_back(to_json(r));
    print_json({{"schema", json_schema_version}, {"samples", cfg.samples}, {"rows", items}});
    return all ? kOk : kInconclusive;
  }
  std::cout << "| quantity | n | k | kind | count | formula | holds |\n";
  std::cout << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows)
    std::cout << "| " << r.quantity << " | " << r.n << " | " << r.k << " | " << to_string(r.kind) << " | " << r.count
              << " | " << r.formula << " | " << (r.holds ? "yes" : "no") << " |\n";
  return all ? kOk : kInconclusive;
}

int cmd_selftest(const RunConfig& cfg) {
  AcceptanceOptions options;
  options.seed = cfg.seed;
  options.scale = cfg.scale;
  bool all = true;
  run_acceptance(options, [&](const CriterionResult& r) {
    all = all && r.pass;
    std::cout << format_result_line(r) << std::endl;
  });
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
  return all ? kOk : kInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sign pattern minimum rank and subspace sign-vector toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "Structured JSON output");
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    sub->add_option("--budget-ms", cfg.budget_ms, "Wall-clock cap for searches, 0 = none")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--out", cfg.out, "Output path");
  };
  auto pattern_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("file", cfg.inputs, what)->required()->check(CLI::ExistingFile);
  };

  struct Entry {
    CLI::App* app;
    int (*run)(const RunConfig&);
  };
  std::vector<Entry> entries;
  auto add = [&](const char* name, const char* help, int (*run)(const RunConfig&)) {
    auto* sub = app.add_subcommand(name, help);
    common(sub);
    entries.push_back({sub, run});
    return sub;
  };

  pattern_input(add("mr", "Minimum rank bracket with certificates", cmd_mr), "Sign pattern file");
  pattern_input(add("signs", "Sign vectors of the column space of a rational matrix", cmd_signs), "Matrix file");
  auto* duality = add("duality-check", "Check sign(L)^perp = sign(L^perp)", cmd_duality);
  duality->add_option("file", cfg.inputs, "Matrix files (column spaces)")->check(CLI::ExistingFile);
  duality->add_option("--random", cfg.random, "Number of random subspaces");
  duality->add_option("--n", cfg.n, "Ambient dimension for --random")->capture_default_str();
  duality->add_option("--k", cfg.k, "Subspace dimension for --random (default: random)");
  pattern_input(add("perp", "Sign vectors orthogonal to every row", cmd_perp), "Sign pattern file");
  pattern_input(add("condense", "Condensed sign pattern", cmd_condense), "Sign pattern file");
  pattern_input(add("maxrank", "Maximum rank (term rank) with a matching", cmd_maxrank), "Sign pattern file");
  pattern_input(add("realize2", "Rank-2 rational realization", cmd_realize2), "Sign pattern file");
  pattern_input(add("realize-nm2", "Rational realization of rank <= rows - 2 (columns as sign vectors)",
                    cmd_realize_nm2),
                "Sign pattern file");
  auto* rationalize = add("rationalize", "Rational B, C, E with B C = E in given sign classes", cmd_rationalize);
  rationalize->add_option("files", cfg.inputs, "Pattern files for B, C and E")->required()->expected(3)->check(
      CLI::ExistingFile);
  auto* extremal = add("extremal", "Extremal sign-vector counts", cmd_extremal);
  extremal->add_flag("--table", cfg.table, "Table of all reproduced values for n <= 6");
  extremal->add_option("--samples", cfg.samples, "Random subspaces per cell")->capture_default_str();
  auto* selftest = add("selftest", "Run the acceptance suite", cmd_selftest);
  selftest->add_option("--scale", cfg.scale, "Sample count multiplier")->capture_default_str()->check(
      CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (const auto& e : entries)
      if (e.app->parsed()) return e.run(cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
