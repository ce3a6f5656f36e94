#pragma once

#include <array>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "boolean_lattice.hpp"
#include "count.hpp"
#include "downset_engine.hpp"
#include "errors.hpp"
#include "iso_classes.hpp"
#include "parallel.hpp"
#include "poset.hpp"
#include "qsplit.hpp"
#include "sigma.hpp"

namespace downsets {

/// nu[i]: traces N of L3(5) whose residual antichain has i points.
using NuTable = std::array<std::uint64_t, 11>;
/// gamma[j][c][a]: for |N2| = j, the N3 whose residual is (A_c x C_2) + A_a.
using GammaTable = std::array<std::array<std::array<std::uint64_t, 7>, 7>, 5>;
/// mu[i][j]: traces N of L3(6) with i residual points on level 2 and j on level 4.
using MuTable = std::array<std::array<std::uint64_t, 16>, 16>;

using CoefficientTable = std::variant<std::monostate, NuTable, GammaTable, MuTable, std::vector<IsoClassRecord>>;

struct MethodReport {
  std::string method;
  Count value;
  std::uint64_t evaluations = 0;
  double seconds = 0.0;  ///< wall time; informational only
  CoefficientTable coefficients;
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::uint64_t pow_u64(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace detail

/// B_-^-(5) as an induced sub-poset of B(5).
inline Poset trimmed_b5() { return sub_poset(boolean(5), Trim::both); }

/// b_-^-(5) with M = L3(5): every residual is the antichain L2(5) \ down(N).
inline MethodReport bmm5_nu() {
  detail::Stopwatch clock;
  const Poset p = trimmed_b5();
  const PointSet l2 = words_with_ones(p, 2);
  const PointSet l3 = words_with_ones(p, 3);
  MethodReport r{"nu", {}, 0, 0.0, {}};
  NuTable nu{};
  decompose(p, l3, [&](const DecompositionTerm& term) {
    if (term.residual_points() != l2 - p.down_closure(term.trace()) ||
        isolated_points(term.residual()) != term.residual().carrier())
      throw ShapeError("nu-method residual is not the antichain L2 \\ down(N)");
    ++nu[term.residual().size()];
    ++r.evaluations;
  });
  for (unsigned i = 0; i < nu.size(); ++i) r.value += Count(nu[i]) * Count::pow2(i);
  r.coefficients = nu;
  r.seconds = clock.seconds();
  return r;
}

struct GammaSetup {
  Poset poset;
  PointSet m2;  ///< level 2, first digit 1
  PointSet m3;  ///< level 3, first digit 0
};

inline GammaSetup gamma_setup() {
  GammaSetup g{trimmed_b5(), {}, {}};
  constexpr std::size_t kFirst = 1U << 4;
  for (std::size_t i = 0; i < g.poset.size(); ++i) {
    const std::size_t w = g.poset.parent_index(i);
    if (std::popcount(w) == 2 && (w & kFirst)) g.m2 = g.m2.with(i);
    if (std::popcount(w) == 3 && !(w & kFirst)) g.m3 = g.m3.with(i);
  }
  return g;
}

/// (c, a) of a residual that must be a disjoint union of 2-chains and points.
inline std::pair<unsigned, unsigned> chains_and_points(const Poset& residual) {
  unsigned c = 0, a = 0;
  PointSet seen;
  for (std::size_t x = 0; x < residual.size(); ++x) {
    if (seen.contains(x)) continue;
    const PointSet comp = residual.down(x) | residual.up(x);
    for (auto y : comp.indices())
      if ((residual.down(y) | residual.up(y)) != comp) throw ShapeError("gamma-method residual has a component that is not C1 or C2");
    if (comp.size() == 1) ++a;
    else if (comp.size() == 2) ++c;
    else throw ShapeError("gamma-method residual has a component with more than two points");
    seen |= comp;
  }
  return {c, a};
}

/// (c, a) histogram over all N3 for a fixed N2.
inline std::array<std::array<std::uint64_t, 7>, 7> gamma_row(const GammaSetup& g, const PointSet& n2,
                                                             std::uint64_t* evaluations = nullptr) {
  std::array<std::array<std::uint64_t, 7>, 7> row{};
  const PointSet m = g.m2 | g.m3;
  for_each_subset(g.m3, [&](const PointSet& n3) {
    const Poset residual = remove(g.poset, updown(g.poset, m, n2 | n3));
    auto [c, a] = chains_and_points(residual);
    ++row[c][a];
    if (evaluations) ++*evaluations;
  });
  return row;
}

/// b_-^-(5) with M = M2 u M3: five representative N2 (one per size) times the
/// sixteen N3, each residual (A_c x C_2) + A_a.
inline MethodReport bmm5_gamma() {
  detail::Stopwatch clock;
  const GammaSetup g = gamma_setup();
  MethodReport r{"gamma", {}, 0, 0.0, {}};
  GammaTable gamma{};
  const auto m2 = g.m2.indices();
  for (unsigned j = 0; j <= 4; ++j) {
    PointSet n2;
    for (unsigned k = 0; k < j; ++k) n2 = n2.with(m2[k]);
    gamma[j] = gamma_row(g, n2, &r.evaluations);
  }
  for (unsigned c = 0; c <= 6; ++c)
    for (unsigned a = 0; a <= 6; ++a)
      for (unsigned j = 0; j <= 4; ++j)
        r.value += Count(detail::pow_u64(3, c)) * Count::pow2(a) * binomial(4, j) * Count(gamma[j][c][a]);
  r.coefficients = gamma;
  r.seconds = clock.seconds();
  return r;
}

/// True iff every N2 of the same size yields the same (c, a) histogram.
inline bool gamma_depends_only_on_size() {
  const GammaSetup g = gamma_setup();
  std::map<std::size_t, std::array<std::array<std::uint64_t, 7>, 7>> by_size;
  bool ok = true;
  for_each_subset(g.m2, [&](const PointSet& n2) {
    auto row = gamma_row(g, n2);
    auto [it, fresh] = by_size.try_emplace(n2.size(), row);
    if (!fresh && it->second != row) ok = false;
  });
  return ok;
}

/// b_-^-(6) with M = L3(6): residuals are antichains P2(N) + P4(N). Subsets
/// are visited in Gray-code order so the level counts update incrementally.
inline MethodReport bmm6_mu() {
  detail::Stopwatch clock;
  const Poset p = sub_poset(boolean(6), Trim::both);
  const PointSet l2 = words_with_ones(p, 2), l3 = words_with_ones(p, 3), l4 = words_with_ones(p, 4);
  const std::vector<std::size_t> mids = l3.indices();
  std::vector<std::vector<std::size_t>> lows(mids.size()), highs(mids.size());
  std::vector<int> above_in(p.size(), 0);   // members of N above a level-2 point
  std::vector<int> below_out(p.size(), 0);  // members of M \ N below a level-4 point
  for (std::size_t k = 0; k < mids.size(); ++k) {
    lows[k] = (p.down(mids[k]) & l2).indices();
    highs[k] = (p.up(mids[k]) & l4).indices();
    for (auto q : highs[k]) ++below_out[q];
  }
  int free2 = static_cast<int>(l2.size());
  int free4 = 0;
  MuTable mu{};
  std::uint32_t in = 0;
  const std::uint32_t total = std::uint32_t{1} << mids.size();
  for (std::uint32_t g = 0;; ++g) {
    ++mu[static_cast<std::size_t>(free2)][static_cast<std::size_t>(free4)];
    if (g + 1 == total) break;
    const unsigned bit = static_cast<unsigned>(std::countr_zero(g + 1));
    in ^= 1U << bit;
    if ((in >> bit) & 1U) {
      for (auto x : lows[bit])
        if (above_in[x]++ == 0) --free2;
      for (auto q : highs[bit])
        if (--below_out[q] == 0) ++free4;
    } else {
      for (auto x : lows[bit])
        if (--above_in[x] == 0) ++free2;
      for (auto q : highs[bit])
        if (below_out[q]++ == 0) --free4;
    }
  }
  MethodReport r{"mu", {}, total, 0.0, {}};
  for (unsigned i = 0; i < 16; ++i)
    for (unsigned j = 0; j < 16; ++j) r.value += Count(mu[i][j]) * Count::pow2(i + j);
  r.coefficients = mu;
  r.seconds = clock.seconds();
  return r;
}

/// b_-^-(6) = sum over N in D(Q23) of 2^t(N) sigma(N), sigma by its defining
/// sum. Evaluations count every (N, N') pair visited.
inline MethodReport bmm6_lemma2_reference(const QSplit& sp, unsigned jobs = 1) {
  detail::Stopwatch clock;
  std::vector<PointSet> members;
  for_each_downset(sp.base, sp.m23, [&](const PointSet& d) { members.push_back(d); });
  std::vector<std::uint64_t> evals(members.size(), 0);
  MethodReport r{"lemma2", {}, 0, 0.0, {}};
  r.value = parallel_sum(members.size(), jobs, [&](std::size_t i) {
    const SigmaValue s = sigma_reference(sp, members[i]);
    evals[i] = s.evaluations;
    return Count::pow2(t_of(sp, members[i])) * s.value;
  });
  for (auto e : evals) r.evaluations += e;
  r.seconds = clock.seconds();
  return r;
}

enum class InnerType { t1_300, t2_410, t3_330, t4_060, other };

inline const char* to_string(InnerType t) {
  switch (t) {
    case InnerType::t1_300: return "1-300";
    case InnerType::t2_410: return "2-410";
    case InnerType::t3_330: return "3-330";
    case InnerType::t4_060: return "4-060";
    case InnerType::other: return "other";
  }
  return "other";
}

/// Type of D (isolated points removed) when D has upper points and e(D) > 0.
inline InnerType classify_inner_type(const QSplit& sp, const PointSet& d) {
  const PointSet ups = d & sp.upper23;
  if (ups.empty() || e_of(sp, d) == 0) return InnerType::other;
  const std::string code = type_code(induced(sp.base, sp.base.down_closure(ups)));
  if (code == "1-300") return InnerType::t1_300;
  if (code == "2-410") return InnerType::t2_410;
  if (code == "3-330") return InnerType::t3_330;
  if (code == "4-060") return InnerType::t4_060;
  throw StructureError("down-set with e > 0 has core type " + code);
}

struct InnerTypeCensus {
  std::uint64_t members = 0;
  std::uint64_t with_upper = 0;
  std::uint64_t positive_e = 0;  ///< with upper points and e(D) > 0
  std::map<std::string, std::uint64_t> by_type;
};

inline InnerTypeCensus inner_type_census(const QSplit& sp) {
  InnerTypeCensus c;
  for_each_downset(sp.base, sp.m23, [&](const PointSet& d) {
    ++c.members;
    if ((d & sp.upper23).empty()) return;
    ++c.with_upper;
    const InnerType t = classify_inner_type(sp, d);
    if (t == InnerType::other) return;
    ++c.positive_e;
    ++c.by_type[to_string(t)];
  });
  return c;
}

/// b_-^-(6) = sum over R in R0 of iota(R) 2^t(R) sum over A of sigma(A + R).
inline MethodReport bmm6_iso(const QSplit& sp, const TTables& tables, std::vector<IsoClassRecord> classes,
                             unsigned jobs = 1) {
  detail::Stopwatch clock;
  MethodReport r{"iso", {}, 0, 0.0, {}};
  r.evaluations = fill_table7(sp, tables, classes, jobs);
  std::sort(classes.begin(), classes.end(), record_order);
  for (const auto& rec : classes) r.value += Count(rec.iota) * Count::pow2(static_cast<unsigned>(rec.t_val)) * Count(rec.inner_sum);
  r.coefficients = std::move(classes);
  r.seconds = clock.seconds();
  return r;
}

/// b_-^-(5) = sum over R in R0 of iota(R) 2^delta(R).
inline MethodReport bmm5_iso(const std::vector<IsoClassRecord>& classes) {
  detail::Stopwatch clock;
  MethodReport r{"iso5", {}, classes.size(), 0.0, {}};
  for (const auto& rec : classes) r.value += Count(rec.iota) * Count::pow2(static_cast<unsigned>(rec.delta));
  r.coefficients = classes;
  r.seconds = clock.seconds();
  return r;
}

/// In P = C2 x Q with M0 the bottom copy: P - M0 updown N equals the top copy
/// restricted to beta[N].
inline bool lemma1_check(const Poset& q, const PointSet& n) {
  if (!q.is_downset(n)) throw NotADownSet("lemma1_check: N is not a down-set of Q");
  const Poset p = product(chain(2), q);
  const std::size_t k = q.size();
  const PointSet m0 = PointSet::full(k);
  const PointSet removed = updown(p, m0, n);
  const PointSet image(n.bits() << k);
  return p.carrier() - removed == image && remove(p, removed) == induced(p, image);
}

/// Recompute t, sigma and the inner sum on every copy of every class
/// (sample_one = false) or on one random non-representative copy per class.
/// Returns the codes whose values were not constant.
inline std::vector<std::string> class_constancy_violations(const QSplit& sp, const TTables& tables,
                                                           const std::vector<IsoClassRecord>& rows, bool sample_one,
                                                           std::uint64_t seed = 1) {
  std::map<CanonicalForm, const IsoClassRecord*> by_form;
  for (const auto& rec : rows) by_form[canonical_form(induced(sp.base, rec.representative))] = &rec;
  std::map<std::string, std::vector<PointSet>> copies;
  const auto ups = sp.upper23.indices();
  for (std::size_t mask = 0; mask < (std::size_t{1} << ups.size()); ++mask) {
    PointSet u;
    for (std::size_t k = 0; k < ups.size(); ++k)
      if ((mask >> k) & 1U) u = u.with(ups[k]);
    const PointSet core = sp.base.down_closure(u);
    auto it = by_form.find(canonical_form(induced(sp.base, core)));
    if (it == by_form.end()) return {"unclassified down-set"};
    copies[it->second->type_code].push_back(core);
  }
  std::mt19937_64 rng(seed);
  std::vector<std::string> bad;
  for (const auto& rec : rows) {
    std::vector<PointSet> check = copies[rec.type_code];
    if (check.size() != rec.iota) {
      bad.push_back(rec.type_code);
      continue;
    }
    if (sample_one) {
      std::vector<PointSet> others;
      for (auto c : check)
        if (c != rec.representative) others.push_back(c);
      check.clear();
      if (!others.empty()) check.push_back(others[rng() % others.size()]);
    }
    for (const auto& core : check) {
      const SigmaPrecomp pc = make_sigma_precomp(sp, core);
      std::uint64_t inner = 0;
      for_each_subset(pc.free_lower, [&](const PointSet& a) { inner += sigma_fast(sp, tables, pc, a).to_u64(); });
      if (t_of(sp, core) != rec.t_val || sigma_fast(sp, tables, pc, PointSet()).to_u64() != rec.sigma_val ||
          pc.downclosure_count != rec.downclosure_count || inner != rec.inner_sum) {
        bad.push_back(rec.type_code);
        break;
      }
    }
  }
  return bad;
}

}  // namespace downsets
