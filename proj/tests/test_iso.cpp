#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "downsets/downsets.hpp"

using namespace downsets;

namespace {

std::vector<std::size_t> shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

struct Classes : ::testing::Test {
  static const QSplit& split() {
    static const QSplit sp = make_qsplit();
    return sp;
  }
  static const RepresentationSystem& system() {
    static const RepresentationSystem rs = representation_system(split(), 4);
    return rs;
  }
  static const std::vector<IsoClassRecord>& rows() {
    static const std::vector<IsoClassRecord> r = table7(split(), build_t_tables(split()), system().r0, 4);
    return r;
  }
  static const IsoClassRecord& row(const std::string& code) {
    for (const auto& r : rows())
      if (r.type_code == code) return r;
    throw std::runtime_error("no row " + code);
  }
};

}  // namespace

TEST(Canonical, SmallCases) {
  std::mt19937_64 rng(1);
  EXPECT_TRUE(are_isomorphic(chain(3), permute(chain(3), shuffled(3, rng))));
  EXPECT_FALSE(are_isomorphic(chain(2), antichain(2)));
  EXPECT_TRUE(are_isomorphic(Poset(), antichain(0)));
  EXPECT_FALSE(are_isomorphic(chain(2), chain(3)));
  EXPECT_THROW(canonical_form(antichain(25)), CapacityError);
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(2);
  std::vector<Poset> posets = {trimmed_b5(), boolean(4).lattice, product(chain(3), antichain(3))};
  for (int k = 0; k < 8; ++k) posets.push_back(random_poset(6 + rng() % 12, 0.3, rng));
  for (const auto& p : posets) {
    const CanonicalForm base = canonical_form(p);
    for (int t = 0; t < 100; ++t) ASSERT_EQ(canonical_form(permute(p, shuffled(p.size(), rng))), base);
  }
}

TEST(Canonical, SeparatesClassesFoundByBruteForce) {
  // all posets on four points up to isomorphism: 16 classes
  std::set<CanonicalForm> forms;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) pairs.emplace_back(i, j);
  for (unsigned mask = 0; mask < (1U << pairs.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) covers.push_back(pairs[k]);
    forms.insert(canonical_form(Poset::from_covers(4, covers)));
  }
  EXPECT_EQ(forms.size(), 16U);
}

TEST(StripIsolated, Cases) {
  const StrippedPoset a = strip_isolated(antichain(3));
  EXPECT_EQ(a.core.size(), 0U);
  EXPECT_EQ(a.isolated_count, 3U);
  const StrippedPoset c = strip_isolated(chain(2));
  EXPECT_EQ(c.core, chain(2));
  EXPECT_EQ(c.isolated_count, 0U);
  const Poset ac = product(antichain(2), chain(2));
  const StrippedPoset s = strip_isolated(direct_sum(ac, antichain(3)));
  EXPECT_EQ(s.core, ac);
  EXPECT_EQ(s.isolated_count, 3U);
}

TEST(TypeCode, Errors) {
  EXPECT_EQ(type_code(Poset()), "0-000");
  EXPECT_THROW(type_code(antichain(1)), DomainError);
  EXPECT_THROW(type_code(chain(3)), DomainError);
}

TEST_F(Classes, SizesAndCopies) {
  const auto& rs = system();
  EXPECT_EQ(rs.r0.size(), 34U);
  EXPECT_EQ(rs.r.size(), 91U);
  EXPECT_EQ(rs.scanned_classes, 91U);
  std::uint64_t copies = 0, weighted = 0;
  std::set<std::string> codes;
  for (const auto& r : rs.r0) {
    copies += r.iota;
    weighted += r.iota << r.delta;
    codes.insert(r.type_code);
  }
  EXPECT_EQ(copies, rs.isolated_free);
  EXPECT_EQ(copies, 1024U);
  EXPECT_EQ(weighted, 6212U);
  EXPECT_EQ(codes.size(), 34U);
}

TEST_F(Classes, TypeCodes) {
  const QSplit& sp = split();
  const std::size_t u = sp.upper23.first();
  EXPECT_EQ(type_code(induced(sp.base, sp.base.down_closure(PointSet::single(u)))), "1-300");
  EXPECT_EQ(type_code(sp.q23), "10-0010");
  for (const auto& r : rows()) {
    const std::size_t dash = r.type_code.find('-');
    EXPECT_EQ(std::stoul(r.type_code.substr(0, dash)), r.upper_count);
    const unsigned c1 = r.type_code[dash + 1] - '0';
    const unsigned c2 = r.type_code[dash + 2] - '0';
    const std::string rest = r.type_code.substr(dash + 3);
    const unsigned c3 = std::stoul(rest.substr(0, rest.find('-')));
    EXPECT_EQ(r.delta, 10 - c1 - c2 - c3) << r.type_code;
  }
}

TEST_F(Classes, CrownSplitsThe440Type) {
  const IsoClassRecord& without = row("4-440-0");
  const IsoClassRecord& with = row("4-440-1");
  EXPECT_EQ(without.iota, 60U);
  EXPECT_EQ(with.iota, 15U);
  const Poset a = induced(split().base, without.representative);
  const Poset b = induced(split().base, with.representative);
  EXPECT_FALSE(are_isomorphic(a, b));
  EXPECT_EQ(row("6-442-0").iota, 15U);
  EXPECT_EQ(row("6-442-1").iota, 60U);
}

TEST_F(Classes, ParameterRows) {
  const auto& r = row("3-330");
  EXPECT_EQ(r.iota, 20U);
  EXPECT_EQ(r.delta, 4U);
  EXPECT_EQ(r.t_val, 0U);
  EXPECT_EQ(r.sigma_val, 294U);
  EXPECT_EQ(r.downclosure_count, 95U);
  EXPECT_EQ(r.inner_sum, 12481U);
  EXPECT_EQ(row("4-060").t_val, 1U);
  for (const auto& x : rows())
    if (x.upper_count == 4 && x.type_code != "4-060") {
      EXPECT_EQ(x.t_val, 0U);
    }
  EXPECT_EQ(row("1-300").iota, 10U);
  EXPECT_EQ(row("5-550").iota, 12U);
  EXPECT_EQ(row("10-0010").iota, 1U);
  EXPECT_TRUE(std::is_sorted(rows().begin(), rows().end(), record_order));
}

TEST_F(Classes, MatchesReferenceTable) {
  std::map<std::string, const IsoClassRecord*> got;
  for (const auto& r : rows()) got[r.type_code] = &r;
  for (const auto& want : known::class_rows()) {
    ASSERT_TRUE(got.count(want.code)) << want.code;
    const IsoClassRecord& r = *got[want.code];
    EXPECT_EQ(r.iota, want.iota) << want.code;
    EXPECT_EQ(r.delta, want.delta) << want.code;
    EXPECT_EQ(r.t_val, want.t) << want.code;
    EXPECT_EQ(r.sigma_val, want.sigma) << want.code;
    EXPECT_EQ(r.downclosure_count, want.down_count) << want.code;
    EXPECT_EQ(r.inner_sum, want.inner_sum) << want.code;
  }
}

TEST_F(Classes, RepresentativeIsLeastCopy) {
  const QSplit& sp = split();
  std::map<CanonicalForm, PointSet> least;
  for_each_downset(sp.base, sp.m23, [&](const PointSet& d) {
    if (!isolated_points(induced(sp.base, d)).empty()) return;
    const CanonicalForm f = canonical_form(induced(sp.base, d));
    auto [it, fresh] = least.try_emplace(f, d);
    if (!fresh && d < it->second) it->second = d;
  });
  EXPECT_EQ(least.size(), 34U);
  for (const auto& r : system().r0)
    EXPECT_EQ(least.at(canonical_form(induced(sp.base, r.representative))), r.representative);
}
