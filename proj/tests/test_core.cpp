#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "downsets/downsets.hpp"

using namespace downsets;

// ---- Count ---------------------------------------------------------------

TEST(Count, ArithmeticAndPrinting) {
  Count a(7581);
  EXPECT_EQ((a * Count(1000) + Count(3)).to_string(), "7581003");
  EXPECT_EQ(Count::pow2(100).to_string(), "1267650600228229401496703205376");
  EXPECT_EQ(Count::parse("56130437228687557907788").to_string(), "56130437228687557907788");
  EXPECT_EQ(Count().to_string(), "0");
  EXPECT_LT(Count(3), Count(4));
}

TEST(Count, OverflowIsAnError) {
  EXPECT_THROW(Count::pow2(128), OverflowError);
  EXPECT_THROW(Count::pow2(127) * Count(2), OverflowError);
  EXPECT_THROW(Count(1) - Count(2), OverflowError);
  EXPECT_THROW(Count::pow2(80).to_u64(), OverflowError);
  EXPECT_THROW(Count::parse("12a"), ParseError);
  EXPECT_THROW(Count::parse("999999999999999999999999999999999999999999"), OverflowError);
}

TEST(Count, Binomial) {
  EXPECT_EQ(binomial(6, 3), Count(20));
  EXPECT_EQ(binomial(5, 0), Count(1));
  EXPECT_EQ(binomial(3, 5), Count(0));
}

// ---- PointSet --------------------------------------------------------------

TEST(PointSet, Basics) {
  PointSet s{1, 4, 127};
  EXPECT_EQ(s.size(), 3U);
  EXPECT_TRUE(s.contains(127));
  EXPECT_EQ(s.first(), 1U);
  EXPECT_EQ(s.without(4).indices(), (std::vector<std::size_t>{1, 127}));
  EXPECT_EQ(PointSet::full(128).size(), 128U);
  EXPECT_EQ(PointSet::full(5).complement(5), PointSet());
  EXPECT_TRUE(PointSet({1}).subset_of(s));
  EXPECT_THROW(PointSet::from_indices({128}), IndexError);
}

TEST(PointSet, SubsetWalkVisitsEverySubsetOnce) {
  const PointSet s{0, 3, 9};
  std::vector<PointSet> seen;
  for_each_subset(s, [&](const PointSet& t) { seen.push_back(t); });
  ASSERT_EQ(seen.size(), 8U);
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(std::unique(seen.begin(), seen.end()), seen.end());
  for (const auto& t : seen) EXPECT_TRUE(t.subset_of(s));
}

// ---- Poset -----------------------------------------------------------------

TEST(Poset, FromCovers) {
  const Poset c2 = Poset::from_covers(2, {{0, 1}});
  EXPECT_TRUE(c2.leq(0, 1));
  EXPECT_FALSE(c2.leq(1, 0));
  EXPECT_TRUE(c2.leq(1, 1));

  const Poset a3 = Poset::from_covers(3, {});
  EXPECT_EQ(a3, antichain(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(a3.leq(i, j), i == j);

  const Poset c3 = Poset::from_covers(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(c3.leq(0, 2));
  EXPECT_EQ(c3, chain(3));
}

TEST(Poset, FromCoversRejectsBadInput) {
  EXPECT_THROW(Poset::from_covers(2, {{0, 1}, {1, 0}}), CycleError);
  EXPECT_THROW(Poset::from_covers(2, {{0, 0}}), CycleError);
  EXPECT_THROW(Poset::from_covers(2, {{0, 2}}), IndexError);
  EXPECT_THROW(Poset::from_covers(129, {}), CapacityError);
}

TEST(Poset, ChainsAndAntichains) {
  EXPECT_EQ(chain(0).size(), 0U);
  EXPECT_EQ(count_downsets(chain(0)), Count(1));
  const Poset c3 = chain(3);
  EXPECT_TRUE(c3.less(0, 1) && c3.less(1, 2));
  EXPECT_EQ(antichain(6).covers().size(), 0U);
}

TEST(Poset, ProductAndSum) {
  const Poset b2 = product(chain(2), chain(2));
  EXPECT_EQ(b2.size(), 4U);
  EXPECT_EQ(count_downsets(b2), Count(6));
  EXPECT_EQ(direct_sum(antichain(1), antichain(1)), antichain(2));
  EXPECT_EQ(count_downsets(product(antichain(6), chain(2))), Count(729));
  EXPECT_THROW(product(antichain(12), antichain(11)), CapacityError);
}

TEST(Poset, InducedAndRemove) {
  const Poset c = induced(chain(3), PointSet{0, 2});
  EXPECT_EQ(c, chain(2));
  EXPECT_EQ(c.parent_index(1), 2U);
  const Poset b2 = product(chain(2), chain(2));
  EXPECT_EQ(remove(b2, PointSet{0, 3}), antichain(2));
  EXPECT_EQ(induced(b2, PointSet()).size(), 0U);
}

TEST(Poset, Closures) {
  EXPECT_EQ(chain(3).down_closure(PointSet{2}), (PointSet{0, 1, 2}));
  EXPECT_EQ(chain(3).down_closure(PointSet()), PointSet());
  const Poset b2 = product(chain(2), chain(2));
  EXPECT_EQ(b2.up_closure(PointSet{0}), b2.carrier());
}

TEST(Poset, Updown) {
  const Poset p = product(chain(2), chain(3));
  EXPECT_EQ(updown(p, PointSet(), PointSet()), PointSet());
  const PointSet all = p.carrier();
  EXPECT_EQ(updown(p, all, p.down_closure(PointSet{2})), all);
  EXPECT_THROW(updown(p, all, PointSet{2}), NotADownSet);

  const BooleanContext b5 = boolean(5);
  const PointSet atoms = b5.level(1);
  const PointSet n = PointSet{atoms.indices()[0], atoms.indices()[3]};
  const Poset residual = remove(b5.lattice, updown(b5.lattice, atoms, n));
  EXPECT_EQ(residual.size(), 1U);
}

TEST(Poset, RandomPosetsSatisfyTheAxioms) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const Poset p = random_poset(12, 0.3, rng);
    for (std::size_t i = 0; i < p.size(); ++i) {
      EXPECT_TRUE(p.leq(i, i));
      for (std::size_t j = 0; j < p.size(); ++j) {
        EXPECT_TRUE(i == j || !(p.leq(i, j) && p.leq(j, i)));
        for (std::size_t l = 0; l < p.size(); ++l)
          EXPECT_TRUE(!(p.leq(i, j) && p.leq(j, l)) || p.leq(i, l));
      }
    }
    const PointSet y = random_subset(p.carrier(), rng);
    EXPECT_EQ(p.is_downset(y), p.down_closure(y) == y);
    EXPECT_EQ(p.is_upset(y), p.up_closure(y) == y);
    // the trace of a down-closure on M is N for every down-set N of P|M
    const PointSet m = random_subset(p.carrier(), rng);
    const Poset pm = induced(p, m);
    const PointSet n = pm.to_parent(pm.down_closure(random_subset(pm.carrier(), rng)));
    EXPECT_EQ(p.down_closure(n) & m, n);
  }
}

// ---- poset text format -----------------------------------------------------

TEST(PosetIo, ParseAndRoundTrip) {
  const std::string text =
      "# the diamond\n"
      "poset v1\n"
      "points 4\n"
      "label 0 bottom\n"
      "cover 0 1\ncover 0 2\ncover 1 3\ncover 2 3\n"
      "cover 0 3   # implied, dropped on output\n";
  const Poset p = parse_poset(text);
  EXPECT_EQ(p.size(), 4U);
  EXPECT_EQ(p.label(0), "bottom");
  EXPECT_EQ(count_downsets(p), Count(6));
  const std::string out = write_poset(p);
  EXPECT_EQ(out.find("cover 0 3"), std::string::npos);
  EXPECT_EQ(write_poset(parse_poset(out)), out);
}

TEST(PosetIo, RandomRoundTrip) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    const Poset p = random_poset(10, 0.25, rng);
    const std::string s = write_poset(p);
    EXPECT_EQ(parse_poset(s), p);
    EXPECT_EQ(write_poset(parse_poset(s)), s);
  }
}

TEST(PosetIo, Errors) {
  EXPECT_THROW(parse_poset("points 2\n"), ParseError);
  EXPECT_THROW(parse_poset("poset v1\ncover 0 1\n"), ParseError);
  EXPECT_THROW(parse_poset("poset v1\npoints 2\ncover 0 5\n"), ParseError);
  EXPECT_THROW(parse_poset("poset v1\npoints 2\ncover 0 1\ncover 1 0\n"), ParseError);
  EXPECT_THROW(parse_poset("poset v1\npoints 2\nbogus\n"), ParseError);
  EXPECT_THROW(parse_poset("poset v1\npoints 200\n"), CapacityError);
}

TEST(PosetIo, Dot) {
  const std::string dot = write_dot(chain(2), "c");
  EXPECT_NE(dot.find("digraph c {"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n1;"), std::string::npos);
}

// ---- parallel helpers ------------------------------------------------------

TEST(Parallel, SumIsIndependentOfWorkers) {
  auto f = [](std::size_t i) { return Count(i * i); };
  const Count one = parallel_sum(1000, 1, f);
  for (unsigned jobs : {2U, 3U, 8U, 64U}) EXPECT_EQ(parallel_sum(1000, jobs, f), one);
  EXPECT_EQ(parallel_sum(0, 4, f), Count(0));
}

TEST(Parallel, ExceptionsPropagate) {
  EXPECT_THROW(parallel_sum(100, 4, [](std::size_t i) -> Count {
                 if (i == 77) throw DomainError("boom");
                 return Count(1);
               }),
               DomainError);
}
