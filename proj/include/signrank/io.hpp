#pragma once

#include "signrank/matrix.hpp"
#include "signrank/sign.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace signrank {

/// Malformed input, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

inline bool is_blank(char c) { return c == ' ' || c == '\t'; }

}  // namespace detail

/// One row per line over '+', '-', '0'; blanks between entries are ignored;
/// lines starting with '#' (after leading blanks) and empty lines are skipped.
inline SignPattern parse_pattern(std::string_view text) {
  std::vector<std::string> rows;
  std::size_t first_row_line = 0;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const auto& line = lines[ln];
    std::string row;
    bool comment = false;
    for (std::size_t col = 0; col < line.size(); ++col) {
      const char c = line[col];
      if (detail::is_blank(c)) continue;
      if (c == '#' && row.empty()) {
        comment = true;
        break;
      }
      if (!sign_from_char(c))
        throw ParseError(ln + 1, col + 1, std::string("unexpected character '") + c + "' in sign pattern");
      row.push_back(c);
    }
    if (comment || row.empty()) continue;
    if (rows.empty()) first_row_line = ln + 1;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(ln + 1, 1,
                       "row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()) + " (from line " + std::to_string(first_row_line) + ")");
    rows.push_back(std::move(row));
  }
  return SignPattern::from_strings(rows);
}

/// One row per line, whitespace-separated integers or p/q fractions. Empty lines
/// and '#' comment lines are skipped. Zero denominators are rejected.
inline RationalMatrix parse_matrix(std::string_view text) {
  std::vector<RationalVector> rows;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const auto& line = lines[ln];
    RationalVector row;
    std::size_t col = 0;
    while (col < line.size()) {
      if (detail::is_blank(line[col])) {
        ++col;
        continue;
      }
      if (line[col] == '#' && row.empty()) break;
      std::size_t end = col;
      while (end < line.size() && !detail::is_blank(line[end])) ++end;
      try {
        row.push_back(parse_rational(std::string_view(line).substr(col, end - col)));
      } catch (const std::exception& e) {
        throw ParseError(ln + 1, col + 1, e.what());
      }
      col = end;
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(ln + 1, 1,
                       "row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

inline std::string format_pattern(const SignPattern& p) {
  std::string out;
  for (const auto& row : p.to_strings()) out += row + "\n";
  return out;
}

inline std::string format_matrix(const RationalMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).str();
    os << "\n";
  }
  return os.str();
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace signrank
