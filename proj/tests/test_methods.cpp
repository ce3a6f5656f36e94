#include <gtest/gtest.h>

#include <random>

#include "downsets/downsets.hpp"

using namespace downsets;

namespace {

const QSplit& split() {
  static const QSplit sp = make_qsplit();
  return sp;
}

const TTables& tables() {
  static const TTables t = build_t_tables(split());
  return t;
}

}  // namespace

TEST(Nu, Table) {
  const MethodReport r = bmm5_nu();
  const NuTable& nu = std::get<NuTable>(r.coefficients);
  EXPECT_EQ(nu, known::kNu);
  EXPECT_EQ(nu[0], 388U);
  EXPECT_EQ(nu[1], 290U);
  EXPECT_EQ(nu[10], 1U);
  EXPECT_EQ(std::accumulate(nu.begin(), nu.end(), std::uint64_t{0}), 1024U);
  EXPECT_EQ(r.value, Count(6212));
}

TEST(Gamma, Table) {
  const MethodReport r = bmm5_gamma();
  const GammaTable& g = std::get<GammaTable>(r.coefficients);
  EXPECT_EQ(g, known::gamma_table());
  EXPECT_EQ(g[0][0][0], 5U);
  EXPECT_EQ(g[0][0][6], 1U);
  EXPECT_EQ(g[4][6][0], 1U);
  for (const auto& row : g) {
    std::uint64_t s = 0;
    for (const auto& c : row)
      for (auto v : c) s += v;
    EXPECT_EQ(s, 16U);
  }
  EXPECT_EQ(r.evaluations, 80U);
  EXPECT_EQ(r.value, Count(6212));
}

TEST(Gamma, ResidualShapes) {
  EXPECT_EQ(chains_and_points(direct_sum(product(antichain(2), chain(2)), antichain(3))),
            (std::pair<unsigned, unsigned>{2, 3}));
  EXPECT_THROW(chains_and_points(chain(3)), ShapeError);
  EXPECT_TRUE(gamma_depends_only_on_size());
}

TEST(Mu, Table) {
  const MethodReport r = bmm6_mu();
  const MuTable& mu = std::get<MuTable>(r.coefficients);
  EXPECT_EQ(mu, known::mu_table());
  EXPECT_EQ(mu[0][0], 165980U);
  EXPECT_EQ(mu[3][3], 800U);
  EXPECT_EQ(mu[15][0], 1U);
  std::uint64_t s = 0;
  for (unsigned i = 0; i < 16; ++i)
    for (unsigned j = 0; j < 16; ++j) {
      s += mu[i][j];
      EXPECT_EQ(mu[i][j], mu[j][i]);
    }
  EXPECT_EQ(s, 1U << 20);
  EXPECT_EQ(r.value, Count(7741776));
}

TEST(QSplitTest, Structure) {
  const QSplit& sp = split();
  EXPECT_EQ(sp.base.size(), 50U);
  EXPECT_EQ(sp.lower23.size(), 10U);
  EXPECT_EQ(sp.upper23.size(), 10U);
  EXPECT_TRUE(are_isomorphic(sp.q23, trimmed_b5()));
  sp.m23.for_each([&](std::size_t x) { EXPECT_EQ(sp.word(sp.beta[x]), sp.word(x) | 32U); });
}

TEST(QSplitTest, Functions) {
  const QSplit& sp = split();
  EXPECT_EQ(t_of(sp, PointSet()), 0U);
  EXPECT_EQ(t_of(sp, sp.m23), 5U);
  EXPECT_EQ(e_of(sp, PointSet()), 5U);
  EXPECT_EQ(s_of(sp, PointSet()), 5U);
  EXPECT_EQ(tables().t0[0], 32U);
  EXPECT_EQ(tables().t1[0], 32U);
  std::uint64_t s = 0;
  for (auto v : tables().t0) s += v;
  EXPECT_EQ(tables().t1[1023], s);
  // t(N) = t(N n M23) on a sample of down-sets of Q
  std::mt19937_64 rng(4);
  const PointSet q = sp.m23 | sp.m34;
  for (int k = 0; k < 200; ++k) {
    const PointSet n = sp.base.down_closure(random_subset(q, rng)) & q;
    EXPECT_EQ(t_of(sp, n), t_of(sp, n & sp.m23));
  }
}

TEST(QSplitTest, UpperPointsHaveEqualToTwo) {
  const QSplit& sp = split();
  sp.upper23.for_each([&](std::size_t u) {
    const PointSet d = sp.base.down_closure(PointSet::single(u));
    EXPECT_EQ(e_of(sp, d), 2U);
    EXPECT_EQ(classify_inner_type(sp, d), InnerType::t1_300);
  });
  EXPECT_EQ(classify_inner_type(sp, PointSet()), InnerType::other);
}

TEST(Sigma, ReferenceValues) {
  const QSplit& sp = split();
  EXPECT_EQ(sigma_reference(sp, PointSet()).value, Count(32));
  EXPECT_EQ(sigma_reference(sp, sp.m23).value, Count(6893));
}

TEST(Sigma, FastAgreesWithDefinition) {
  const QSplit& sp = split();
  const auto rs = representation_system(sp, 4);
  std::mt19937_64 rng(8);
  for (const auto& rec : rs.r0) {
    const SigmaPrecomp pc = make_sigma_precomp(sp, rec.representative);
    for (int k = 0; k < 6; ++k) {
      const PointSet a = random_subset(pc.free_lower, rng);
      ASSERT_EQ(sigma_fast(sp, tables(), pc, a), sigma_reference(sp, rec.representative | a).value) << rec.type_code;
    }
  }
  const SigmaPrecomp full = make_sigma_precomp(sp, sp.m23);
  EXPECT_EQ(sigma_fast(sp, tables(), full, PointSet()), Count(6893));
  EXPECT_THROW(sigma_fast(sp, tables(), full, PointSet{sp.lower23.first()}), StructureError);
}

TEST(Census, UpperPoints) {
  const InnerTypeCensus c = inner_type_census(split());
  EXPECT_EQ(c.members, 6212U);
  EXPECT_EQ(c.with_upper, 5188U);
  // the prose figure of 491 counts every down-set with e > 0; see the ledger
  EXPECT_EQ(c.positive_e, 235U);
  std::uint64_t by_type = 0;
  for (const auto& [code, k] : c.by_type) by_type += k;
  EXPECT_EQ(by_type, c.positive_e);
}

TEST(Methods, SixAgree) {
  const QSplit& sp = split();
  const MethodReport l2 = bmm6_lemma2_reference(sp, 4);
  EXPECT_EQ(l2.value, Count(7741776));
  EXPECT_EQ(l2.evaluations, 3933651U);
  const auto rs = representation_system(sp, 4);
  const MethodReport iso = bmm6_iso(sp, tables(), rs.r0, 4);
  EXPECT_EQ(iso.value, Count(7741776));
  EXPECT_EQ(iso.evaluations, 272U);
  const auto& rows = std::get<std::vector<IsoClassRecord>>(iso.coefficients);
  EXPECT_EQ(rows.front().inner_sum, 173433U);
  EXPECT_EQ(rows[1].inner_sum, 42075U);
  const MethodReport five = bmm5_iso(rows);
  EXPECT_EQ(five.value, Count(6212));
  EXPECT_EQ(five.evaluations, 34U);
  EXPECT_EQ(rows.front().iota << rows.front().delta, 1024U);
}

TEST(Methods, ClassConstancy) {
  const QSplit& sp = split();
  const auto rows = table7(sp, tables(), representation_system(sp, 4).r0, 4);
  EXPECT_TRUE(class_constancy_violations(sp, tables(), rows, true, 5).empty());
  EXPECT_TRUE(class_constancy_violations(sp, tables(), rows, false).empty());
}

TEST(Lemma1, Cases) {
  const Poset q = trimmed_b5();
  EXPECT_TRUE(lemma1_check(q, PointSet()));
  EXPECT_TRUE(lemma1_check(q, q.carrier()));
  const Poset p = product(chain(2), q);
  EXPECT_TRUE(remove(p, updown(p, PointSet::full(q.size()), PointSet())).empty());
  EXPECT_EQ(remove(p, updown(p, PointSet::full(q.size()), q.carrier())), q);
  EXPECT_THROW(lemma1_check(chain(3), PointSet{2}), NotADownSet);
  std::mt19937_64 rng(6);
  for (int k = 0; k < 500; ++k) {
    const Poset r = random_poset(rng() % 11, 0.3, rng);
    ASSERT_TRUE(lemma1_check(r, r.down_closure(random_subset(r.carrier(), rng))));
  }
}
