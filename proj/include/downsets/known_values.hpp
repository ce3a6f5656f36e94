#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "count.hpp"
#include "dedekind_methods.hpp"

namespace downsets::known {

/// Dedekind numbers b(0) .. b(8).
inline const std::array<Count, 9> kDedekind = {
    Count(2),       Count(3),       Count(6),
    Count(20),      Count(168),     Count(7581),
    Count(7828354), Count(2414682040998ULL),
    Count::parse("56130437228687557907788"),
};

/// b_-(k) for k = 2 .. 6 (index k).
inline const std::array<Count, 7> kTrimmedLower = {Count(0), Count(0), Count(2), Count(9), Count(114), Count(6894),
                                                   Count(7785062)};
/// b_-^-(k) for k = 3 .. 6 (index k).
inline const std::array<Count, 7> kTrimmedBoth = {Count(0), Count(0), Count(0), Count(1), Count(64), Count(6212),
                                                  Count(7741776)};

inline constexpr NuTable kNu = {388, 290, 195, 70, 40, 30, 0, 10, 0, 0, 1};

/// gamma[j][c][a]
inline GammaTable gamma_table() {
  GammaTable g{};
  struct Cell {
    unsigned j, c, a;
    std::uint64_t v;
  };
  constexpr Cell cells[] = {
      {0, 0, 0, 5}, {0, 0, 1, 6}, {0, 0, 3, 4}, {0, 0, 6, 1},
      {1, 0, 0, 5}, {1, 0, 1, 6}, {1, 0, 3, 4}, {1, 0, 6, 1},
      {2, 0, 1, 5}, {2, 0, 2, 5}, {2, 0, 4, 2}, {2, 1, 0, 1}, {2, 1, 2, 2}, {2, 1, 5, 1},
      {3, 0, 3, 5}, {3, 0, 4, 3}, {3, 0, 6, 1}, {3, 1, 2, 3}, {3, 2, 2, 3}, {3, 3, 3, 1},
      {4, 0, 6, 5}, {4, 1, 5, 6}, {4, 3, 3, 4}, {4, 6, 0, 1},
  };
  for (const auto& cell : cells) g[cell.j][cell.c][cell.a] = cell.v;
  return g;
}

/// mu[i][j]
inline MuTable mu_table() {
  MuTable m{};
  const std::vector<std::vector<std::uint64_t>> rows = {
      {165980, 152265, 86130, 43385, 17700, 7569, 2895, 1350, 420, 160, 90, 0, 20, 0, 0, 1},
      {152265, 103500, 43080, 16320, 4410, 1560, 420, 180, 0, 15},
      {86130, 43080, 13260, 3660, 585, 180, 60},
      {43385, 16320, 3660, 800, 0, 60},
      {17700, 4410, 585},
      {7569, 1560, 180, 60, 0, 6},
      {2895, 420, 60},
      {1350, 180},
      {420},
      {160, 15},
      {90},
      {},
      {20},
      {},
      {},
      {1},
  };
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m[i][j] = rows[i][j];
  return m;
}

struct ClassRow {
  std::string code;
  std::uint64_t iota, delta, t, sigma, down_count, inner_sum;
};

/// Parameters of the 34 classes of down-sets of B_-^-(5) without isolated points.
inline const std::vector<ClassRow>& class_rows() {
  static const std::vector<ClassRow> rows = {
      {"0-000", 1, 10, 0, 32, 1, 173433},
      {"1-300", 10, 7, 0, 76, 9, 42075},
      {"2-600", 15, 4, 0, 221, 81, 10821},
      {"2-410", 30, 5, 0, 166, 41, 17711},
      {"3-710", 30, 2, 0, 644, 369, 4791},
      {"3-520", 60, 3, 0, 387, 187, 7621},
      {"3-601", 10, 3, 0, 403, 189, 7738},
      {"3-330", 20, 4, 0, 294, 95, 12481},
      {"4-901", 10, 0, 0, 2201, 1701, 2201},
      {"4-630", 60, 1, 0, 1227, 853, 3433},
      {"4-440-0", 60, 2, 0, 728, 434, 5462},
      {"4-440-1", 15, 2, 0, 697, 433, 5413},
      {"4-521", 60, 2, 0, 736, 439, 5519},
      {"4-060", 5, 4, 1, 332, 113, 14297},
      {"5-550", 12, 0, 0, 2496, 1975, 2496},
      {"5-631", 60, 0, 0, 2530, 2006, 2530},
      {"5-360", 60, 1, 0, 1400, 1007, 3938},
      {"5-441", 60, 1, 0, 1423, 1022, 3994},
      {"5-522", 30, 1, 0, 1437, 1035, 4036},
      {"5-251", 30, 2, 1, 842, 524, 6378},
      {"6-361", 60, 0, 0, 2925, 2377, 2925},
      {"6-442-0", 15, 0, 1, 2984, 2431, 2984},
      {"6-442-1", 60, 0, 0, 2967, 2416, 2967},
      {"6-604", 5, 0, 0, 3045, 2489, 3045},
      {"6-090", 10, 1, 0, 1607, 1195, 4545},
      {"6-252", 60, 1, 1, 1666, 1241, 4704},
      {"7-172", 30, 0, 0, 3456, 2881, 3456},
      {"7-253", 60, 0, 1, 3529, 2949, 3529},
      {"7-334", 20, 0, 1, 3584, 3001, 3584},
      {"7-063", 10, 1, 2, 1968, 1519, 5591},
      {"8-064", 15, 0, 1, 4214, 3607, 4214},
      {"8-145", 30, 0, 2, 4310, 3698, 4310},
      {"9-037", 10, 0, 3, 5337, 4693, 5337},
      {"10-0010", 1, 0, 5, 6893, 6212, 6893},
  };
  return rows;
}

inline constexpr std::uint64_t kStandardSummands5 = 210;
inline constexpr std::uint64_t kStandardSummands6 = 14196;
inline constexpr std::uint64_t kGammaEvaluations = 80;
inline constexpr std::uint64_t kIsoEvaluations = 245;
inline constexpr std::size_t kR0Size = 34;
inline constexpr std::size_t kRSize = 91;
inline constexpr std::uint64_t kChainProductTrimmed5 = 3933651;  ///< d(C2 x B_-^-(5))
inline constexpr std::uint64_t kWithUpperPoints = 5188;
inline constexpr std::uint64_t kPositiveE = 491;

}  // namespace downsets::known
