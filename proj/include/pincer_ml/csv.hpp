#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "pincer_ml/error.hpp"

namespace pincer_ml::csv {

struct Row {
  std::size_t line = 0;  // 1-based, header is line 1
  std::vector<std::string> fields;
};

namespace detail {

inline std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

// RFC 4180 subset: quoted fields with "" escapes, no embedded newlines.
inline std::vector<std::string> split_line(const std::string& line, std::size_t line_no) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"' && trim(cur).empty()) {
      cur.clear();
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      out.push_back(was_quoted ? cur : trim(cur));
      cur.clear();
      was_quoted = false;
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) throw Error(ErrorKind::MalformedInput, "unterminated quote on line " + std::to_string(line_no));
  out.push_back(was_quoted ? cur : trim(cur));
  return out;
}

}  // namespace detail

/// Reads a headed CSV file. The header must match `header` exactly
/// (case-sensitive, whitespace-trimmed); blank lines are skipped.
inline std::vector<Row> read(std::istream& in, const std::vector<std::string>& header) {
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (detail::trim(line).empty()) continue;
    auto fields = detail::split_line(line, line_no);
    if (!have_header) {
      if (fields != header) {
        std::string want;
        for (const auto& h : header) want += (want.empty() ? "" : ",") + h;
        throw Error(ErrorKind::MalformedInput, "expected header '" + want + "' on line " + std::to_string(line_no));
      }
      have_header = true;
      continue;
    }
    if (fields.size() != header.size()) {
      throw Error(ErrorKind::MalformedInput, "line " + std::to_string(line_no) + ": expected " +
                                                 std::to_string(header.size()) + " fields, got " +
                                                 std::to_string(fields.size()));
    }
    rows.push_back(Row{line_no, std::move(fields)});
  }
  if (!have_header) throw Error(ErrorKind::MalformedInput, "missing CSV header");
  return rows;
}

}  // namespace pincer_ml::csv
