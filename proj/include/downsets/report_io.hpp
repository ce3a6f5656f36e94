#pragma once

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "boolean_lattice.hpp"
#include "dedekind_methods.hpp"
#include "errors.hpp"
#include "iso_classes.hpp"
#include "qsplit.hpp"

namespace downsets {

enum class Format { text, csv, json };

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw ParseError("unknown format '" + s + "'");
}

/// One row of the class listing with the representative spelled out as words.
struct ClassListingRow {
  std::string code;
  std::uint64_t iota = 0, delta = 0, t = 0, sigma = 0, down_count = 0, inner_sum = 0;
  std::vector<std::string> representative;  ///< 6-digit binary words, ascending

  friend bool operator==(const ClassListingRow&, const ClassListingRow&) = default;
};

inline std::vector<ClassListingRow> class_listing(const QSplit& sp, const std::vector<IsoClassRecord>& rows) {
  std::vector<ClassListingRow> out;
  for (const auto& r : rows) {
    ClassListingRow row{r.type_code, r.iota, r.delta, r.t_val, r.sigma_val, r.downclosure_count, r.inner_sum, {}};
    r.representative.for_each([&](std::size_t i) { row.representative.push_back(binary_word(sp.word(i), 6)); });
    out.push_back(std::move(row));
  }
  return out;
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::uint64_t parse_u64(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a non-negative integer, got '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw ParseError("integer out of range: " + s);
  }
}

inline std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

}  // namespace detail

// ---- nu ----------------------------------------------------------------

inline void write_nu(std::ostream& out, const NuTable& nu, Format f) {
  switch (f) {
    case Format::csv:
      for (std::size_t i = 0; i < nu.size(); ++i) out << (i ? "," : "") << nu[i];
      out << '\n';
      break;
    case Format::json:
      out << nlohmann::json{{"nu", nu}}.dump() << '\n';
      break;
    case Format::text:
      out << "i  nu_i\n";
      for (std::size_t i = 0; i < nu.size(); ++i) out << std::setw(2) << i << ' ' << nu[i] << '\n';
      break;
  }
}

inline NuTable parse_nu_csv(const std::string& s) {
  const auto lines = detail::lines_of(s);
  if (lines.size() != 1) throw ParseError("nu csv: expected one line");
  const auto cells = detail::split(lines[0], ',');
  NuTable nu{};
  if (cells.size() != nu.size()) throw ParseError("nu csv: expected 11 values");
  for (std::size_t i = 0; i < nu.size(); ++i) nu[i] = detail::parse_u64(cells[i]);
  return nu;
}

inline NuTable parse_nu_json(const std::string& s) {
  return nlohmann::json::parse(s).at("nu").get<NuTable>();
}

// ---- gamma -------------------------------------------------------------

inline void write_gamma(std::ostream& out, const GammaTable& g, Format f) {
  if (f == Format::json) {
    nlohmann::json cells = nlohmann::json::array();
    for (unsigned j = 0; j < g.size(); ++j)
      for (unsigned c = 0; c < 7; ++c)
        for (unsigned a = 0; a < 7; ++a)
          if (g[j][c][a]) cells.push_back({{"j", j}, {"c", c}, {"a", a}, {"gamma", g[j][c][a]}});
    out << nlohmann::json{{"gamma", cells}}.dump() << '\n';
    return;
  }
  if (f == Format::csv) out << "j,c,a,gamma\n";
  else out << "j  (c,a)  gamma\n";
  for (unsigned j = 0; j < g.size(); ++j)
    for (unsigned c = 0; c < 7; ++c)
      for (unsigned a = 0; a < 7; ++a) {
        if (!g[j][c][a]) continue;
        if (f == Format::csv) out << j << ',' << c << ',' << a << ',' << g[j][c][a] << '\n';
        else out << j << "  (" << c << ',' << a << ")  " << g[j][c][a] << '\n';
      }
}

inline GammaTable parse_gamma_csv(const std::string& s) {
  const auto lines = detail::lines_of(s);
  if (lines.empty() || lines[0] != "j,c,a,gamma") throw ParseError("gamma csv: missing header");
  GammaTable g{};
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto cells = detail::split(lines[k], ',');
    if (cells.size() != 4) throw ParseError("gamma csv: expected 4 cells on line " + std::to_string(k + 1));
    const auto j = detail::parse_u64(cells[0]), c = detail::parse_u64(cells[1]), a = detail::parse_u64(cells[2]);
    if (j >= 5 || c >= 7 || a >= 7) throw ParseError("gamma csv: index out of range");
    g[j][c][a] = detail::parse_u64(cells[3]);
  }
  return g;
}

inline GammaTable parse_gamma_json(const std::string& s) {
  GammaTable g{};
  const auto doc = nlohmann::json::parse(s);
  for (const auto& cell : doc.at("gamma")) {
    const auto j = cell.at("j").get<unsigned>(), c = cell.at("c").get<unsigned>(), a = cell.at("a").get<unsigned>();
    if (j >= 5 || c >= 7 || a >= 7) throw ParseError("gamma json: index out of range");
    g[j][c][a] = cell.at("gamma").get<std::uint64_t>();
  }
  return g;
}

// ---- mu ----------------------------------------------------------------

inline void write_mu(std::ostream& out, const MuTable& mu, Format f) {
  if (f == Format::json) {
    out << nlohmann::json{{"mu", mu}}.dump() << '\n';
    return;
  }
  for (const auto& row : mu) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (f == Format::csv) out << (j ? "," : "") << row[j];
      else out << (j ? " " : "") << std::setw(6) << row[j];
    }
    out << '\n';
  }
}

inline MuTable parse_mu_csv(const std::string& s) {
  const auto lines = detail::lines_of(s);
  MuTable mu{};
  if (lines.size() != mu.size()) throw ParseError("mu csv: expected 16 lines");
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const auto cells = detail::split(lines[i], ',');
    if (cells.size() != 16) throw ParseError("mu csv: expected 16 values on line " + std::to_string(i + 1));
    for (std::size_t j = 0; j < 16; ++j) mu[i][j] = detail::parse_u64(cells[j]);
  }
  return mu;
}

inline MuTable parse_mu_json(const std::string& s) { return nlohmann::json::parse(s).at("mu").get<MuTable>(); }

// ---- class listing -----------------------------------------------------

inline constexpr const char* kClassHeader = "type,iota,delta,t,sigma,down_count,inner_sum,representative";

inline std::string join_words(const std::vector<std::string>& words) {
  std::string s;
  for (std::size_t i = 0; i < words.size(); ++i) s += (i ? " " : "") + words[i];
  return s;
}

inline void write_classes(std::ostream& out, const std::vector<ClassListingRow>& rows, Format f) {
  if (f == Format::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
      arr.push_back({{"type", r.code},
                     {"iota", r.iota},
                     {"delta", r.delta},
                     {"t", r.t},
                     {"sigma", r.sigma},
                     {"down_count", r.down_count},
                     {"inner_sum", r.inner_sum},
                     {"representative", r.representative}});
    out << nlohmann::json{{"classes", arr}}.dump() << '\n';
    return;
  }
  if (f == Format::csv) {
    out << kClassHeader << '\n';
    for (const auto& r : rows)
      out << r.code << ',' << r.iota << ',' << r.delta << ',' << r.t << ',' << r.sigma << ',' << r.down_count << ','
          << r.inner_sum << ',' << join_words(r.representative) << '\n';
    return;
  }
  out << std::left << std::setw(9) << "type" << std::right << std::setw(5) << "iota" << std::setw(6) << "delta"
      << std::setw(3) << "t" << std::setw(7) << "sigma" << std::setw(7) << "#down" << std::setw(8) << "inner" << '\n';
  for (const auto& r : rows)
    out << std::left << std::setw(9) << r.code << std::right << std::setw(5) << r.iota << std::setw(6) << r.delta
        << std::setw(3) << r.t << std::setw(7) << r.sigma << std::setw(7) << r.down_count << std::setw(8)
        << r.inner_sum << '\n';
}

inline std::vector<ClassListingRow> parse_classes_csv(const std::string& s) {
  const auto lines = detail::lines_of(s);
  if (lines.empty() || lines[0] != kClassHeader) throw ParseError("class csv: missing header");
  std::vector<ClassListingRow> rows;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto cells = detail::split(lines[k], ',');
    if (cells.size() != 8) throw ParseError("class csv: expected 8 cells on line " + std::to_string(k + 1));
    ClassListingRow r;
    r.code = cells[0];
    r.iota = detail::parse_u64(cells[1]);
    r.delta = detail::parse_u64(cells[2]);
    r.t = detail::parse_u64(cells[3]);
    r.sigma = detail::parse_u64(cells[4]);
    r.down_count = detail::parse_u64(cells[5]);
    r.inner_sum = detail::parse_u64(cells[6]);
    if (!cells[7].empty()) r.representative = detail::split(cells[7], ' ');
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::vector<ClassListingRow> parse_classes_json(const std::string& s) {
  std::vector<ClassListingRow> rows;
  const auto doc = nlohmann::json::parse(s);
  for (const auto& c : doc.at("classes"))
    rows.push_back({c.at("type").get<std::string>(), c.at("iota").get<std::uint64_t>(),
                    c.at("delta").get<std::uint64_t>(), c.at("t").get<std::uint64_t>(),
                    c.at("sigma").get<std::uint64_t>(), c.at("down_count").get<std::uint64_t>(),
                    c.at("inner_sum").get<std::uint64_t>(), c.at("representative").get<std::vector<std::string>>()});
  return rows;
}

/// Wall time is left out on purpose so the output is reproducible.
inline void write_report(std::ostream& out, const std::string& what, const MethodReport& r, Format f) {
  if (f == Format::json) {
    out << nlohmann::json{{"quantity", what}, {"method", r.method}, {"value", r.value.to_string()},
                          {"evaluations", r.evaluations}}
               .dump()
        << '\n';
  } else if (f == Format::csv) {
    out << "quantity,method,value,evaluations\n" << what << ',' << r.method << ',' << r.value << ',' << r.evaluations << '\n';
  } else {
    out << what << " = " << r.value << "\n"
        << "method: " << r.method << "\n"
        << "evaluations: " << r.evaluations << '\n';
  }
}

}  // namespace downsets
