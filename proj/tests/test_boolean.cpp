#include <gtest/gtest.h>

#include "downsets/downsets.hpp"

using namespace downsets;

TEST(Boolean, Structure) {
  for (unsigned n = 0; n <= 6; ++n) {
    const BooleanContext b = boolean(n);
    ASSERT_EQ(b.lattice.size(), std::size_t{1} << n);
    for (std::size_t x = 0; x < b.lattice.size(); ++x)
      for (std::size_t y = 0; y < b.lattice.size(); ++y) ASSERT_EQ(b.lattice.leq(x, y), (x & y) == x);
    PointSet all;
    for (unsigned l = 0; l <= n; ++l) {
      EXPECT_EQ(Count(b.level(l).size()), binomial(n, l));
      EXPECT_FALSE(all.intersects(b.level(l)));
      all |= b.level(l);
    }
    EXPECT_EQ(all, b.lattice.carrier());
  }
  EXPECT_EQ(boolean(3).lattice.label(5), "101");
  EXPECT_THROW(boolean(8), CapacityError);
}

TEST(Boolean, TrimmedPosets) {
  EXPECT_EQ(sub_poset(boolean(3), Trim::both).size(), 0U);
  EXPECT_EQ(count_downsets(sub_poset(boolean(3), Trim::both)), Count(1));
  EXPECT_EQ(sub_poset(boolean(4), Trim::both), antichain(6));
  EXPECT_EQ(count_downsets(sub_poset(boolean(4), Trim::both)), Count(64));
  EXPECT_EQ(sub_poset(boolean(5), Trim::both).size(), 20U);
  EXPECT_EQ(sub_poset(boolean(6), Trim::both).size(), 50U);
  EXPECT_EQ(count_downsets(sub_poset(boolean(2), Trim::none)), Count(6));
  EXPECT_THROW(sub_poset(boolean(2), Trim::both), DomainError);
  EXPECT_EQ(sub_poset(boolean(1), Trim::lower).size(), 0U);
  for (unsigned n = 2; n <= 5; ++n) {
    const BooleanContext b = boolean(n);
    EXPECT_EQ(count_downsets(sub_poset(b, Trim::lower)), count_downsets(sub_poset(b, Trim::upper)));
    // canonical forms are capped at 24 points
    if (n <= 4) {
      EXPECT_TRUE(are_isomorphic(dual(sub_poset(b, Trim::lower)), sub_poset(b, Trim::upper)));
    }
  }
}

TEST(Ladder, Theorem2) {
  auto bmm = small_trimmed_values();
  const DedekindLadder l3 = dedekind_via_theorem2(3, bmm);
  EXPECT_EQ(l3.trimmed_lower.at(3), Count(9));
  EXPECT_EQ(l3.value, Count(20));
  bmm[5] = Count(6212);
  const DedekindLadder l5 = dedekind_via_theorem2(5, bmm);
  EXPECT_EQ(l5.trimmed_lower.at(5), Count(6894));
  EXPECT_EQ(l5.value, Count(7581));
  bmm[6] = Count(7741776);
  const DedekindLadder l6 = dedekind_via_theorem2(6, bmm);
  EXPECT_EQ(l6.trimmed_lower.at(6), Count(7785062));
  EXPECT_EQ(l6.value, Count(7828354));
  EXPECT_EQ(l6.trimmed_lower.at(2), Count(2));
  EXPECT_EQ(dedekind_via_theorem2(0, {}).value, Count(2));
  EXPECT_EQ(dedekind_via_theorem2(1, {}).value, Count(3));
  EXPECT_EQ(dedekind_via_theorem2(2, {}).value, Count(6));
  EXPECT_THROW(dedekind_via_theorem2(5, small_trimmed_values()), MissingInput);
}

TEST(Ladder, AgreesWithDirectCounts) {
  std::map<unsigned, Count> bmm;
  for (unsigned k = 3; k <= 6; ++k) bmm[k] = count_downsets(sub_poset(boolean(k), Trim::both));
  for (unsigned n = 0; n <= 6; ++n) {
    const DedekindLadder l = dedekind_via_theorem2(n, bmm);
    EXPECT_EQ(l.value, count_downsets(boolean(n).lattice)) << n;
    for (unsigned k = 2; k <= n; ++k)
      EXPECT_EQ(l.trimmed_lower.at(k), count_downsets(sub_poset(boolean(k), Trim::lower))) << k;
  }
}

TEST(Standard, Values) {
  EXPECT_EQ(dedekind_standard(2).value, Count(6));
  EXPECT_EQ(dedekind_standard(3).value, Count(20));
  EXPECT_EQ(dedekind_standard(4).value, Count(168));
  const StandardResult s5 = dedekind_standard(5);
  EXPECT_EQ(s5.value, Count(7581));
  EXPECT_EQ(s5.summands, 210U);
  const StandardResult s6 = dedekind_standard(6, 4);
  EXPECT_EQ(s6.value, Count(7828354));
  EXPECT_EQ(s6.summands, 14196U);
  EXPECT_THROW(dedekind_standard(1), DomainError);
  EXPECT_THROW(dedekind_standard(8), CapacityError);
}

TEST(ResidualShape, AtomsOfB5) {
  const BooleanContext b5 = boolean(5);
  const auto atoms = b5.level(1).indices();
  const ResidualShape s0 = theorem2_residual_shape(b5, PointSet());
  EXPECT_EQ(s0.kind, ResidualKind::singleton_bottom);
  EXPECT_EQ(count_downsets(s0.residual), Count(2));
  const ResidualShape s1 = theorem2_residual_shape(b5, PointSet{atoms[2]});
  EXPECT_EQ(s1.kind, ResidualKind::empty);
  EXPECT_EQ(count_downsets(s1.residual), Count(1));
  const ResidualShape s3 = theorem2_residual_shape(b5, PointSet{atoms[0], atoms[2], atoms[4]});
  EXPECT_EQ(s3.kind, ResidualKind::trimmed_lower);
  EXPECT_EQ(s3.k, 3U);
  EXPECT_EQ(count_downsets(s3.residual), Count(9));
  EXPECT_THROW(theorem2_residual_shape(b5, PointSet{3}), DomainError);
}

TEST(ResidualShape, ResidualStaysBelowLevelK) {
  for (unsigned n = 2; n <= 6; ++n) {
    const BooleanContext b = boolean(n);
    for_each_subset(b.level(1), [&](const PointSet& atoms) {
      const ResidualShape s = theorem2_residual_shape(b, atoms);
      if (s.k < 2) return;
      s.residual_points.for_each([&](std::size_t w) {
        EXPECT_GE(std::popcount(w), 2);
        EXPECT_LE(static_cast<unsigned>(std::popcount(w)), s.k);
      });
    });
  }
}
