#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "canonical.hpp"
#include "count.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "poset.hpp"
#include "qsplit.hpp"
#include "sigma.hpp"

namespace downsets {

/// One class of down-sets of Q23 without isolated points.
struct IsoClassRecord {
  PointSet representative;  ///< least member mask, in QSplit::base indexing
  std::string type_code;
  std::size_t upper_count = 0;
  std::uint64_t iota = 0;              ///< number of copies in Q23
  std::uint64_t delta = 0;             ///< free lower points
  std::uint64_t t_val = 0;             ///< t(R)
  std::uint64_t sigma_val = 0;         ///< sigma(R)
  std::uint64_t downclosure_count = 0; ///< #down-sets of Q23 inside R
  std::uint64_t inner_sum = 0;         ///< sum over A in Delta(R) of sigma(A + R)
};

namespace detail {

/// Height-two view of a poset without isolated points: lower = minimal points,
/// upper = everything else.
inline bool contains_8_crown(const Poset& core, const PointSet& lower, const PointSet& upper) {
  bool found = false;
  const auto ups = upper.indices();
  const auto lows = lower.indices();
  for_each_k_subset(ups, 4, [&](const PointSet& us) {
    if (found) return;
    for_each_k_subset(lows, 4, [&](const PointSet& ls) {
      if (found) return;
      // every chosen vertex has degree two inside the chosen 8 points
      bool degrees = true;
      us.for_each([&](std::size_t u) { degrees = degrees && ((core.down(u) & ls).size() == 2); });
      ls.for_each([&](std::size_t l) { degrees = degrees && ((core.up(l) & us).size() == 2); });
      if (!degrees) return;
      // 2-regular bipartite graph on 8 vertices is one 8-cycle iff connected
      const PointSet all = us | ls;
      PointSet comp = PointSet::single(us.first());
      for (PointSet frontier = comp; !frontier.empty();) {
        PointSet reach;
        frontier.for_each([&](std::size_t x) { reach |= (core.down(x) | core.up(x)) & all; });
        frontier = reach - comp;
        comp |= frontier;
      }
      found = comp == all;
    });
  });
  return found;
}

}  // namespace detail

/// Code "u-c1c2c3": u upper points, c_j lower points covered by exactly j
/// upper points. Types 4-440 and 6-442 get a -0/-1 suffix (8-crown, resp.
/// whether every upper point has a lower cover that is covered three times).
inline std::string type_code(const Poset& core) {
  if (core.empty()) return "0-000";
  PointSet lower, upper;
  for (std::size_t i = 0; i < core.size(); ++i) {
    const bool below_something = core.up(i).size() > 1;
    const bool above_something = core.down(i).size() > 1;
    if (!below_something && !above_something) throw DomainError("type_code: poset has isolated points");
    if (below_something && above_something) throw DomainError("type_code: poset has height above two");
    if (below_something) lower = lower.with(i);
    else upper = upper.with(i);
  }
  std::size_t c[4] = {0, 0, 0, 0};
  lower.for_each([&](std::size_t l) {
    const std::size_t covers = (core.up(l) & upper).size();
    if (covers > 3) throw DomainError("type_code: lower point covered more than three times");
    ++c[covers];
  });
  std::string code = std::to_string(upper.size()) + "-" + std::to_string(c[1]) + std::to_string(c[2]) +
                     std::to_string(c[3]);
  if (code == "4-440") {
    code += detail::contains_8_crown(core, lower, upper) ? "-1" : "-0";
  } else if (code == "6-442") {
    bool every = true;
    upper.for_each([&](std::size_t x) {
      bool has = false;
      (core.down(x) & lower).for_each([&](std::size_t y) { has = has || (core.up(y) & upper).size() == 3; });
      every = every && has;
    });
    code += every ? "-0" : "-1";
  }
  return code;
}

/// Order used for Table-7 style listings: number of upper points, then code.
inline bool record_order(const IsoClassRecord& a, const IsoClassRecord& b) {
  if (a.upper_count != b.upper_count) return a.upper_count < b.upper_count;
  return a.type_code < b.type_code;
}

struct RepresentationSystem {
  /// R0: classes of down-sets of Q23 without isolated points (iota, delta and
  /// the representative filled; the sigma columns are filled by table7()).
  std::vector<IsoClassRecord> r0;
  /// R: every class of down-sets of Q23, as (R0 code, number of isolated points).
  std::vector<std::pair<std::string, std::size_t>> r;
  /// Distinct canonical forms found by scanning every down-set of Q23.
  std::size_t scanned_classes = 0;
  /// Down-sets of Q23 without isolated points found by that scan.
  std::size_t isolated_free = 0;
};

/// Classify the down-sets of Q23. A down-set without isolated points is
/// down(U) for its set U of upper points, so R0 comes from the 1024 subsets U.
inline RepresentationSystem representation_system(const QSplit& sp, unsigned jobs = 1) {
  RepresentationSystem rs;
  const std::vector<std::size_t> ups = sp.upper23.indices();
  const std::size_t subsets = std::size_t{1} << ups.size();
  std::vector<PointSet> cores(subsets);
  std::vector<CanonicalForm> forms(subsets);
  parallel_for(subsets, jobs, [&](std::size_t mask) {
    PointSet u;
    for (std::size_t k = 0; k < ups.size(); ++k)
      if ((mask >> k) & 1U) u = u.with(ups[k]);
    cores[mask] = sp.base.down_closure(u);
    forms[mask] = canonical_form(induced(sp.base, cores[mask]));
  });
  std::map<CanonicalForm, IsoClassRecord> classes;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    auto [it, fresh] = classes.try_emplace(forms[mask]);
    IsoClassRecord& rec = it->second;
    if (fresh || cores[mask] < rec.representative) rec.representative = cores[mask];
    ++rec.iota;
  }
  for (auto& [form, rec] : classes) {
    rec.upper_count = (rec.representative & sp.upper23).size();
    rec.delta = (sp.lower23 - rec.representative).size();
    rec.type_code = type_code(induced(sp.base, rec.representative));
    rs.r0.push_back(rec);
  }
  std::sort(rs.r0.begin(), rs.r0.end(), record_order);
  for (const auto& rec : rs.r0)
    for (std::size_t a = 0; a <= rec.delta; ++a) rs.r.emplace_back(rec.type_code, a);

  // independent scan over every down-set of Q23
  std::vector<PointSet> all;
  for_each_downset(sp.base, sp.m23, [&](const PointSet& d) { all.push_back(d); });
  std::vector<CanonicalForm> all_forms(all.size());
  std::vector<char> free_flag(all.size(), 0);
  parallel_for(all.size(), jobs, [&](std::size_t i) {
    const Poset p = induced(sp.base, all[i]);
    all_forms[i] = canonical_form(p);
    free_flag[i] = isolated_points(p).empty() ? 1 : 0;
  });
  std::unordered_set<CanonicalForm, CanonicalFormHash> distinct(all_forms.begin(), all_forms.end());
  rs.scanned_classes = distinct.size();
  for (char f : free_flag) rs.isolated_free += static_cast<std::size_t>(f);
  return rs;
}

/// Fill t, sigma, #down and the inner sum for every class; the inner sum uses
/// sigma_fast. Returns the number of sigma_fast evaluations of down-sets with
/// upper points.
inline std::uint64_t fill_table7(const QSplit& sp, const TTables& tables, std::vector<IsoClassRecord>& rows,
                                 unsigned jobs = 1) {
  std::vector<std::uint64_t> evals(rows.size(), 0);
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    IsoClassRecord& rec = rows[i];
    const SigmaPrecomp pc = make_sigma_precomp(sp, rec.representative);
    rec.t_val = t_of(sp, rec.representative);
    rec.downclosure_count = pc.downclosure_count;
    rec.sigma_val = sigma_fast(sp, tables, pc, PointSet()).to_u64();
    if (pc.upper.empty()) {
      // no upper points: sigma(A) = T1(A), so the inner sum is the T1 total
      rec.inner_sum = tables.t1_total();
      return;
    }
    std::uint64_t inner = 0;
    for_each_subset(pc.free_lower, [&](const PointSet& a) {
      if (t_of(sp, rec.representative | a) != rec.t_val) throw StructureError("t(A + R) differs from t(R)");
      inner += sigma_fast(sp, tables, pc, a).to_u64();
      ++evals[i];
    });
    rec.inner_sum = inner;
  });
  std::uint64_t total = 0;
  for (auto e : evals) total += e;
  return total;
}

/// Fully populated Table-7 rows in (u, code) order.
inline std::vector<IsoClassRecord> table7(const QSplit& sp, const TTables& tables, std::vector<IsoClassRecord> r0,
                                          unsigned jobs = 1) {
  fill_table7(sp, tables, r0, jobs);
  std::sort(r0.begin(), r0.end(), record_order);
  return r0;
}

}  // namespace downsets
