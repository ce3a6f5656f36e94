#pragma once

#include <charconv>
#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poset.hpp"

namespace downsets {

// Text format, one construct per line, '#' starts a comment:
//
//   poset v1
//   points <n>
//   label <i> <text>      (optional, text runs to end of line)
//   cover <i> <j>         (i is covered by j)
//
// write_poset emits the transitive reduction in ascending (i, j) order, so
// write(read(write(P))) reproduces the same bytes.

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::string_view next_token(std::string_view& s) {
  s = trim(s);
  std::size_t end = 0;
  while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
  auto tok = s.substr(0, end);
  s.remove_prefix(end);
  return tok;
}

inline std::size_t parse_index(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                     std::string(tok) + "'");
  return v;
}

}  // namespace detail

inline Poset read_poset(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  bool have_points = false;
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<std::pair<std::size_t, std::string>> labels;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto keyword = detail::next_token(line);
    if (!have_header) {
      if (keyword != "poset" || detail::trim(line) != "v1")
        throw ParseError("line " + std::to_string(line_no) + ": expected 'poset v1' header");
      have_header = true;
      continue;
    }
    if (keyword == "points") {
      if (have_points) throw ParseError("line " + std::to_string(line_no) + ": duplicate 'points'");
      n = detail::parse_index(detail::next_token(line), line_no);
      if (!detail::trim(line).empty()) throw ParseError("line " + std::to_string(line_no) + ": trailing text");
      if (n > kMaxPoints) throw CapacityError("poset with " + std::to_string(n) + " points exceeds 128");
      have_points = true;
    } else if (keyword == "label") {
      if (!have_points) throw ParseError("line " + std::to_string(line_no) + ": 'label' before 'points'");
      auto idx = detail::parse_index(detail::next_token(line), line_no);
      if (idx >= n) throw ParseError("line " + std::to_string(line_no) + ": label index out of range");
      labels.emplace_back(idx, std::string(detail::trim(line)));
    } else if (keyword == "cover") {
      if (!have_points) throw ParseError("line " + std::to_string(line_no) + ": 'cover' before 'points'");
      auto lo = detail::parse_index(detail::next_token(line), line_no);
      auto hi = detail::parse_index(detail::next_token(line), line_no);
      if (!detail::trim(line).empty()) throw ParseError("line " + std::to_string(line_no) + ": trailing text");
      if (lo >= n || hi >= n) throw ParseError("line " + std::to_string(line_no) + ": cover index out of range");
      covers.emplace_back(lo, hi);
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (!have_header) throw ParseError("missing 'poset v1' header");
  if (!have_points) throw ParseError("missing 'points' line");

  std::vector<std::string> names;
  if (!labels.empty()) {
    names.resize(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
    for (auto& [i, s] : labels) names[i] = std::move(s);
  }
  try {
    return Poset::from_covers(n, covers, std::move(names));
  } catch (const CycleError& e) {
    throw ParseError(std::string("cover relation is not a partial order: ") + e.what());
  }
}

inline Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  return read_poset(in);
}

inline std::string write_poset(const Poset& p) {
  std::ostringstream out;
  out << "poset v1\n" << "points " << p.size() << '\n';
  if (p.has_labels())
    for (std::size_t i = 0; i < p.size(); ++i) out << "label " << i << ' ' << p.labels()[i] << '\n';
  for (auto [i, j] : p.covers()) out << "cover " << i << ' ' << j << '\n';
  return out.str();
}

/// Transitive reduction as a DOT digraph, edges pointing upwards.
inline std::string write_dot(const Poset& p, const std::string& name = "poset") {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) out << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
  for (auto [i, j] : p.covers()) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace downsets
