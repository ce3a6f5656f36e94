#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "boolean_lattice.hpp"
#include "canonical.hpp"
#include "count.hpp"
#include "downset_engine.hpp"
#include "errors.hpp"
#include "poset.hpp"

namespace downsets {

/// Points of an induced sub-poset of some B(n) whose word has `ones` ones.
inline PointSet words_with_ones(const Poset& sub, unsigned ones) {
  PointSet out;
  for (std::size_t i = 0; i < sub.size(); ++i)
    if (static_cast<unsigned>(std::popcount(sub.parent_index(i))) == ones) out = out.with(i);
  return out;
}

/// B_-^-(6) split by the first digit:
///   M23 = levels 2,3 with x1 = 0      M34 = levels 3,4 with x1 = 1
///   E2  = level 2 with x1 = 1         E4  = level 4 with x1 = 0
/// All point sets are in the indexing of `base`; base.parent_index(i) is the
/// 6-digit word of point i, whose first digit is bit 5.
struct QSplit {
  Poset base;
  PointSet m23, m34, e2, e4;
  PointSet lower23;  ///< M23 on level 2 ("lower points")
  PointSet upper23;  ///< M23 on level 3 ("upper points")
  Poset q, q23, q34, s, t;
  std::vector<std::size_t> beta;          ///< first-digit flip M23 -> M34; size() for other points
  std::vector<std::size_t> lower_points;  ///< lower23 in ascending index order; bit k of a table index

  std::size_t word(std::size_t i) const { return base.parent_index(i); }

  PointSet beta_image(const PointSet& y) const {
    PointSet out;
    y.for_each([&](std::size_t i) { out = out.with(beta[i]); });
    return out;
  }

  /// Y subset of lower23 -> 10-bit table index.
  std::size_t table_index(const PointSet& y) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < lower_points.size(); ++k)
      if (y.contains(lower_points[k])) idx |= std::size_t{1} << k;
    return idx;
  }
  PointSet from_table_index(std::size_t idx) const {
    PointSet out;
    for (std::size_t k = 0; k < lower_points.size(); ++k)
      if ((idx >> k) & 1U) out = out.with(lower_points[k]);
    return out;
  }
};

inline QSplit make_qsplit() {
  const BooleanContext b6 = boolean(6);
  QSplit sp;
  sp.base = sub_poset(b6, Trim::both);
  constexpr std::size_t kFirst = 1U << 5;
  const std::size_t n = sp.base.size();
  sp.beta.assign(n, n);
  std::vector<std::size_t> index_of_word(64, n);
  for (std::size_t i = 0; i < n; ++i) index_of_word[sp.word(i)] = i;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t w = sp.word(i);
    const int ones = std::popcount(w);
    const bool first = (w & kFirst) != 0;
    if (!first && (ones == 2 || ones == 3)) sp.m23 = sp.m23.with(i);
    if (first && (ones == 3 || ones == 4)) sp.m34 = sp.m34.with(i);
    if (first && ones == 2) sp.e2 = sp.e2.with(i);
    if (!first && ones == 4) sp.e4 = sp.e4.with(i);
    if (!first && ones == 2) sp.lower23 = sp.lower23.with(i);
    if (!first && ones == 3) sp.upper23 = sp.upper23.with(i);
  }
  sp.m23.for_each([&](std::size_t i) { sp.beta[i] = index_of_word[sp.word(i) | kFirst]; });
  sp.lower_points = sp.lower23.indices();

  sp.q = induced(sp.base, sp.m23 | sp.m34);
  sp.q23 = induced(sp.base, sp.m23);
  sp.q34 = induced(sp.base, sp.m34);
  sp.s = induced(sp.base, sp.e2 | sp.m34);
  sp.t = induced(sp.base, sp.e4 | sp.m23);

  // structural claims the methods rely on
  if (sp.base.size() != 50 || sp.m23.size() != 20 || sp.m34.size() != 20 || sp.e2.size() != 5 || sp.e4.size() != 5)
    throw StructureError("Q-split block sizes differ from 50 = 20 + 20 + 5 + 5");
  if ((sp.m23 | sp.m34 | sp.e2 | sp.e4) != sp.base.carrier() ||
      (sp.m23.size() + sp.m34.size() + sp.e2.size() + sp.e4.size()) != sp.base.size())
    throw StructureError("Q-split blocks do not partition B_-^-(6)");
  const Poset b5 = sub_poset(boolean(5), Trim::both);
  if (!are_isomorphic(sp.q23, b5) || !are_isomorphic(sp.q34, b5))
    throw StructureError("Q23/Q34 are not isomorphic to B_-^-(5)");
  for (auto x : sp.m23.indices()) {
    if (!sp.base.less(x, sp.beta[x])) throw StructureError("x < beta(x) fails");
    for (auto y : sp.m34.indices())
      if (sp.base.less(x, y) != sp.base.leq(sp.beta[x], y))
        throw StructureError("x < y <=> beta(x) <= y fails");
  }
  return sp;
}

/// s(N) = #(E2 \ down_S(M34 n N))
inline unsigned s_of(const QSplit& sp, const PointSet& n) {
  return static_cast<unsigned>((sp.e2 - sp.base.down_closure(sp.m34 & n)).size());
}

/// t(N) = #(E4 \ up_T(M23 \ N))
inline unsigned t_of(const QSplit& sp, const PointSet& n) {
  return static_cast<unsigned>((sp.e4 - sp.base.up_closure(sp.m23 - n)).size());
}

/// e(Y) = #(E2 \ down_S beta[Y]) for Y inside M23
inline unsigned e_of(const QSplit& sp, const PointSet& y) {
  return static_cast<unsigned>((sp.e2 - sp.base.down_closure(sp.beta_image(y & sp.m23))).size());
}

/// T0(Y) = 2^e(Y) and its subset-sum transform T1(Y) = sum over Z in Y of
/// T0(Z), for every set Y of lower points (indexed via QSplit::table_index).
struct TTables {
  std::array<std::uint64_t, 1024> t0{};
  std::array<std::uint64_t, 1024> t1{};

  std::uint64_t t1_total() const {
    std::uint64_t s = 0;
    for (auto v : t1) s += v;
    return s;
  }
};

inline TTables build_t_tables(const QSplit& sp) {
  TTables tt;
  for (std::size_t y = 0; y < tt.t0.size(); ++y) tt.t0[y] = std::uint64_t{1} << e_of(sp, sp.from_table_index(y));
  tt.t1 = tt.t0;
  for (std::size_t bit = 0; bit < 10; ++bit)
    for (std::size_t y = 0; y < tt.t1.size(); ++y)
      if ((y >> bit) & 1U) tt.t1[y] += tt.t1[y ^ (std::size_t{1} << bit)];
  return tt;
}

struct SigmaValue {
  Count value;
  std::uint64_t evaluations = 0;  ///< number of sub-down-sets visited
};

/// Defining sum: sigma(N) = sum over down-sets N' of Q23 inside N of 2^e(N').
inline SigmaValue sigma_reference(const QSplit& sp, const PointSet& n) {
  SigmaValue r;
  std::uint64_t total = 0;
  for_each_downset(sp.base, n & sp.m23, [&](const PointSet& sub) {
    total += std::uint64_t{1} << e_of(sp, sub);
    ++r.evaluations;
  });
  r.value = Count(total);
  return r;
}

}  // namespace downsets
