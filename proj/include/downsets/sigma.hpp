#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "count.hpp"
#include "downset_engine.hpp"
#include "errors.hpp"
#include "qsplit.hpp"

namespace downsets {

/// Per-representative data for the fast sigma formula, derived from
/// e()-evaluations and checked against the expected shape:
///  - every upper point u has two disjoint 3-sets G1(u), G2(u) of lower points
///    outside down(u) with e(Y u down(u)) = 2, 1, 0 for Y empty, Y inside one
///    of them, anything else;
///  - every pair V of upper points whose down-set has five lower points has a
///    single point g(V) with e(Y u down(V)) = 1 iff Y is inside {g(V)};
///  - triples and quadruples of upper points whose down-set has six lower
///    points have e(down(V)) = 1 and e = 0 once any lower point is added.
struct SigmaPrecomp {
  PointSet representative;
  PointSet upper;            ///< U
  PointSet lower;            ///< lower points of the representative
  PointSet free_lower;       ///< Delta(R): lower points of M23 outside R
  std::uint64_t downclosure_count = 0;  ///< number of down-sets of Q23 inside R

  struct UpperPointGroups {
    std::size_t point;
    PointSet g1, g2;
  };
  std::vector<UpperPointGroups> groups;
  std::vector<std::size_t> pair_points;  ///< g(V) for each five-lower-point pair V
  std::uint64_t triples = 0;             ///< 3-subsets of U with six lower points
  std::uint64_t quadruples = 0;          ///< 4-subsets of U with six lower points
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw StructureError("sigma precomputation: " + what);
}

template <typename F>
void for_each_k_subset(const std::vector<std::size_t>& items, std::size_t k, F&& f) {
  const std::size_t n = items.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    PointSet s;
    for (auto i : idx) s = s.with(items[i]);
    f(s);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

inline SigmaPrecomp make_sigma_precomp(const QSplit& sp, const PointSet& representative) {
  using detail::require;
  require(representative.subset_of(sp.m23) && sp.base.is_downset(representative),
          "representative is not a down-set of Q23");
  SigmaPrecomp pc;
  pc.representative = representative;
  pc.upper = representative & sp.upper23;
  pc.lower = representative & sp.lower23;
  pc.free_lower = sp.lower23 - representative;
  pc.downclosure_count = count_downsets_within(sp.base, representative).to_u64();

  for (auto u : pc.upper.indices()) {
    const PointSet base = sp.base.down(u);
    const PointSet delta = sp.lower23 - base;
    require(e_of(sp, base) == 2, "e(down u) != 2");
    PointSet candidates;
    delta.for_each([&](std::size_t y) {
      if (e_of(sp, base.with(y)) == 1) candidates = candidates.with(y);
    });
    require(candidates.size() == 6, "expected six lower points with e = 1 next to an upper point");
    // split the candidates by whether a pair still has e = 1
    const std::size_t first = candidates.first();
    PointSet g1 = PointSet::single(first);
    (candidates.without(first)).for_each([&](std::size_t y) {
      if (e_of(sp, base | PointSet{first, y}) == 1) g1 = g1.with(y);
    });
    const PointSet g2 = candidates - g1;
    require(g1.size() == 3 && g2.size() == 3, "G1(u), G2(u) are not two 3-sets");
    for_each_subset(delta, [&](const PointSet& y) {
      const unsigned expect = y.empty() ? 2U : (y.subset_of(g1) || y.subset_of(g2)) ? 1U : 0U;
      require(e_of(sp, base | y) == expect, "e(Y u down u) does not follow the G1/G2 rule");
    });
    pc.groups.push_back({u, g1, g2});
  }

  const std::vector<std::size_t> ups = pc.upper.indices();
  detail::for_each_k_subset(ups, 2, [&](const PointSet& v) {
    const PointSet base = sp.base.down_closure(v);
    const std::size_t lows = (base & sp.lower23).size();
    if (lows != 5) {
      require(lows == 6, "pair down-set with unexpected lower point count");
      for_each_subset(sp.lower23 - base, [&](const PointSet& y) {
        require(e_of(sp, base | y) == 0, "six-lower-point pair with e > 0");
      });
      return;
    }
    const PointSet delta = sp.lower23 - base;
    PointSet g;
    delta.for_each([&](std::size_t y) {
      if (e_of(sp, base.with(y)) == 1) g = g.with(y);
    });
    require(g.size() == 1, "g(V) is not a single point");
    for_each_subset(delta, [&](const PointSet& y) {
      require(e_of(sp, base | y) == (y.subset_of(g) ? 1U : 0U), "e(Y u down V) does not follow the g(V) rule");
    });
    pc.pair_points.push_back(g.first());
  });

  for (std::size_t k = 3; k <= 4; ++k) {
    detail::for_each_k_subset(ups, k, [&](const PointSet& v) {
      const PointSet base = sp.base.down_closure(v);
      const PointSet delta = sp.lower23 - base;
      const bool six = (base & sp.lower23).size() == 6;
      for_each_subset(delta, [&](const PointSet& y) {
        const unsigned expect = (six && y.empty()) ? 1U : 0U;
        require(e_of(sp, base | y) == expect, "e(Y u down V) unexpected for |V| = " + std::to_string(k));
      });
      if (six) ++(k == 3 ? pc.triples : pc.quadruples);
    });
  }
  // larger upper sets never have e > 0
  for (std::size_t k = 5; k <= ups.size(); ++k)
    detail::for_each_k_subset(ups, k, [&](const PointSet& v) {
      require(e_of(sp, sp.base.down_closure(v)) == 0, "e > 0 with five or more upper points");
    });
  return pc;
}

/// sigma(A + R) = 2^|A| #down(R) - 2^|A'| + T1(A') + 2|U| + rho_1-300 + rho_2-410
///              + rho_3-330 + rho_4-060, with A' the lower points of A + R.
inline Count sigma_fast(const QSplit& sp, const TTables& tables, const SigmaPrecomp& pc, const PointSet& a) {
  if (!a.subset_of(pc.free_lower)) throw StructureError("A is not a set of free lower points of R");
  const PointSet lower = pc.lower | a;
  std::uint64_t rho = 0;
  for (const auto& g : pc.groups)
    rho += (std::uint64_t{1} << (g.g1 & lower).size()) + (std::uint64_t{1} << (g.g2 & lower).size()) - 1;
  for (auto gv : pc.pair_points) rho += lower.contains(gv) ? 2 : 1;
  rho += pc.triples + pc.quadruples;
  const std::uint64_t value = (pc.downclosure_count << a.size()) - (std::uint64_t{1} << lower.size()) +
                              tables.t1[sp.table_index(lower)] + 2 * pc.upper.size() + rho;
  return Count(value);
}

}  // namespace downsets
