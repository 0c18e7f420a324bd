#pragma once

#include "signrank/extremal.hpp"
#include "signrank/minrank.hpp"
#include "signrank/realize.hpp"

#include <json.hpp>

#include <limits>
#include <string>

namespace signrank {

using Json = nlohmann::json;

inline constexpr int json_schema_version = 1;

inline Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline Json to_json(const IntegerVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

/// Canonical rendering: one string per row.
inline Json to_json(const SignPattern& p) { return p.to_strings(); }

inline Json to_json(const SignVectorSet& s) {
  Json a = Json::array();
  for (const auto& v : s) a.push_back(v.to_string());
  return a;
}

/// Entries as "p" or "p/q" strings.
inline Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const std::vector<LineImage>& map) {
  Json a = Json::array();
  for (const auto& img : map)
    a.push_back(img.sign == Sign::Zero ? Json(nullptr) : Json{{"index", img.index}, {"sign", std::string(1, to_char(img.sign))}});
  return a;
}

inline Json to_json(const Mr2Certificate& c) {
  std::string row_signature, signature;
  for (Sign s : c.row_signature) row_signature.push_back(to_char(s));
  for (Sign s : c.signature) signature.push_back(to_char(s));
  return {{"condensed", to_json(c.condensation.pattern)},
          {"row_map", to_json(c.condensation.row_map)},
          {"col_map", to_json(c.condensation.col_map)},
          {"row_signature", row_signature},
          {"signature", signature},
          {"column_order", c.column_order}};
}

inline Json to_json(const Rank2Type& t) {
  std::string orientation;
  for (Sign s : t.orientation) orientation.push_back(to_char(s));
  return {{"ambient", t.ambient}, {"zero_set", t.zero_set}, {"classes", t.classes}, {"orientation", orientation}};
}

/// {dim, ambient, count, signs, witnesses: {sign -> integer vector}}. Witnesses
/// are primitive integer vectors of L itself, not basis coefficients.
inline Json to_json(const SubspaceSignReport& r) {
  Json witnesses = Json::object();
  for (const auto& [s, w] : r.witnesses)
    witnesses[s.to_string()] = to_json(primitive_integer_vector(r.subspace.basis() * to_rational(w)));
  return {{"schema", json_schema_version},
          {"dim", r.subspace.dim()},
          {"ambient", r.subspace.ambient_dim()},
          {"count", r.signs.size()},
          {"signs", to_json(r.signs)},
          {"witnesses", witnesses}};
}

inline Json to_json(const Evidence& e) {
  return std::visit(
      [](const auto& ev) -> Json {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, MatchingEvidence>) {
          Json entries = Json::array();
          for (auto [i, j] : ev.entries) entries.push_back({i, j});
          return {{"kind", "max_rank_matching"}, {"entries", entries}};
        } else if constexpr (std::is_same_v<T, Mr2Certificate>) {
          return {{"kind", "mr2_certificate"}, {"certificate", to_json(ev)}};
        } else if constexpr (std::is_same_v<T, NullVectorEvidence>) {
          return {{"kind", "null_sign_vector"}, {"x", ev.x.to_string()}};
        } else if constexpr (std::is_same_v<T, LMatrixEvidence>) {
          return {{"kind", "l_matrix"}};
        } else if constexpr (std::is_same_v<T, NotRank2Evidence>) {
          return {{"kind", "not_rank2"}};
        } else if constexpr (std::is_same_v<T, TypeEvidence>) {
          return {{"kind", "rank2_type"}, {"type", to_json(ev.type)}};
        } else if constexpr (std::is_same_v<T, NoTypeEvidence>) {
          return {{"kind", "no_rank2_type"}};
        } else {
          return {{"kind", "realization"}, {"rank", ev.rank}, {"matrix", to_json(ev.matrix)}};
        }
      },
      e);
}

inline Json to_json(const MinRankBracket& b) {
  Json certs = Json::array();
  for (const auto& e : b.certificates) certs.push_back(to_json(e));
  return {{"schema", json_schema_version}, {"lower", b.lower},         {"upper", b.upper},
          {"exact", b.exact()},            {"transposed", b.transposed}, {"budget_exceeded", b.budget_exceeded},
          {"certificates", certs}};
}

inline Json to_json(const RealizationResult& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.column_witnesses) witnesses.push_back(to_json(w));
  return {{"schema", json_schema_version},
          {"rank", r.claimed_rank},
          {"matrix", to_json(r.matrix)},
          {"type", to_json(r.type)},
          {"plane_basis", to_json(r.plane.basis())},
          {"complement_basis", to_json(r.complement.basis())},
          {"column_witnesses", witnesses}};
}

inline Json to_json(const ExtremalReport& r) {
  Json j = {{"quantity", r.quantity},
            {"n", r.n},
            {"k", r.k},
            {"kind", std::string(to_string(r.kind))},
            {"count", r.count},
            {"formula", r.formula},
            {"holds", r.holds}};
  if (!r.achieved.empty()) j["achieved"] = r.achieved;
  if (r.witness_basis) j["witness_basis"] = to_json(*r.witness_basis);
  if (r.witness_pattern) j["witness_pattern"] = to_json(*r.witness_pattern);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace signrank
