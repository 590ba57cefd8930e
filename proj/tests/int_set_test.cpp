#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sumset/int_set.hpp"

using namespace sumset;

namespace {

IntSet from(const oracle::Values& v) { return make_set(v); }

TEST(MakeSet, SortsAndDeduplicates) {
  EXPECT_EQ(oracle::values(make_set({3, 0, 3, 1})), (oracle::Values{0, 1, 3}));
  EXPECT_EQ(make_set({0}).size(), 1U);
  EXPECT_EQ(make_set({0}).to_string(), "{0}");
}

TEST(MakeSet, RejectsBadInput) {
  const std::vector<Int> empty;
  try {
    make_set(empty);
    FAIL() << "empty set accepted";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.reason(), ValidationError::Reason::empty_set);
  }
  try {
    make_set({1, -2});
    FAIL() << "negative value accepted";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.reason(), ValidationError::Reason::negative_value);
  }
  try {
    make_set({Int{1} << 30});
    FAIL() << "universe cap ignored";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.reason(), ValidationError::Reason::universe_exceeded);
  }
}

TEST(MakeSet, UniverseCapIsConfigurable) {
  const auto saved = config::universe_bits();
  config::set_universe_bits(16);
  EXPECT_THROW(make_set({16}), ValidationError);
  EXPECT_NO_THROW(make_set({15}));
  EXPECT_THROW(sumset::sumset(make_set({8}), make_set({8})), ValidationError);
  config::set_universe_bits(saved);
}

TEST(IntSet, BitsAndElementsAgree) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const IntSet a = from(oracle::random_values(rng, 300));
    ASSERT_TRUE(a.consistent());
    for (Int x = 0; x <= a.max() + 70; ++x) ASSERT_EQ(a.contains(x), oracle::has(oracle::values(a), x));
    EXPECT_FALSE(a.contains(-1));
  }
}

TEST(Ell, Examples) {
  EXPECT_EQ(ell(make_set({0, 1, 3})), 3);
  EXPECT_EQ(ell(make_set({5})), 0);
  EXPECT_EQ(ell(make_set({2, 7})), 5);
}

TEST(Normalize, Examples) {
  const Normalized a = normalize(make_set({4, 10, 16}));
  EXPECT_EQ(a.set, make_set({0, 1, 2}));
  EXPECT_EQ(a.offset, 4);
  EXPECT_EQ(a.divisor, 6);
  const Normalized b = normalize(make_set({0, 1, 3}));
  EXPECT_EQ(b.set, make_set({0, 1, 3}));
  EXPECT_EQ(b.offset, 0);
  EXPECT_EQ(b.divisor, 1);
  const Normalized c = normalize(make_set({7}));
  EXPECT_EQ(c.set, make_set({0}));
  EXPECT_EQ(c.offset, 7);
  EXPECT_EQ(c.divisor, 1);
}

TEST(ApDifference, Examples) {
  EXPECT_EQ(ap_difference(make_set({0, 4, 10})), 2);
  EXPECT_EQ(ap_difference(make_set({0, 1, 3})), 1);
  EXPECT_EQ(ap_difference(make_set({3, 10})), 7);
  EXPECT_THROW(ap_difference(make_set({4})), DomainError);
  EXPECT_FALSE(is_primitive(make_set({4})));
  EXPECT_FALSE(is_primitive(make_set({0, 2})));
  EXPECT_TRUE(is_primitive(make_set({0, 2, 3})));
}

TEST(Sumset, Examples) {
  EXPECT_EQ(sumset::sumset(make_set({0, 2}), make_set({0, 3})), make_set({0, 2, 3, 5}));
  const IntSet b = make_set({1, 4, 9, 70});
  EXPECT_EQ(sumset::sumset(make_set({0}), b), b);
  EXPECT_EQ(sumset::sumset(make_set({0, 1, 3}), make_set({0, 1, 3})), make_set({0, 1, 2, 3, 4, 6}));
}

TEST(KFold, Examples) {
  const IntSet a = make_set({0, 1, 3});
  EXPECT_EQ(k_fold(a, 1), a);
  const IntSet expected = make_set({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12});
  EXPECT_EQ(k_fold(a, 4), expected);
  EXPECT_EQ(k_fold(make_set({1, 2}), 3), make_set({3, 4, 5, 6}));
  EXPECT_THROW(k_fold(a, 0), DomainError);
}

TEST(FamilySum, Examples) {
  const Family ones(3, make_set({0, 1}));
  EXPECT_EQ(family_sum(ones), IntSet::interval(0, 3));
  const Family two{make_set({0, 2}), make_set({0, 3})};
  EXPECT_EQ(family_sum(two), make_set({0, 2, 3, 5}));
  const Family single{make_set({2, 9})};
  EXPECT_EQ(family_sum(single), make_set({2, 9}));
  EXPECT_THROW(family_sum(Family{}), DomainError);
}

TEST(LongestBlock, Examples) {
  EXPECT_EQ(longest_block(make_set({0, 1, 2, 5, 6})), (Block{0, 2}));
  EXPECT_EQ(longest_block(make_set({4})), (Block{4, 0}));
  EXPECT_EQ(longest_block(k_fold(make_set({0, 1, 3}), 4)), (Block{0, 10}));
  // Leftmost wins among equal runs.
  EXPECT_EQ(longest_block(make_set({3, 4, 8, 9})), (Block{3, 1}));
}

TEST(RunContaining, FindsMaximalRun) {
  const IntSet a = make_set({0, 1, 2, 5, 6});
  EXPECT_EQ(run_containing(a, 1), (Interval{0, 2}));
  EXPECT_EQ(run_containing(a, 6), (Interval{5, 6}));
  EXPECT_TRUE(run_containing(a, 3).empty());
}

TEST(LongestAp, Examples) {
  const APWitness a = longest_ap(make_set({0, 1, 2, 5, 6}));
  EXPECT_EQ(a.start, 0);
  EXPECT_EQ(a.difference, 1);
  EXPECT_EQ(a.length, 2);
  const APWitness b = longest_ap(make_set({0, 3, 6, 9}));
  EXPECT_EQ(b.start, 0);
  EXPECT_EQ(b.difference, 3);
  EXPECT_EQ(b.length, 3);
  const APWitness c = longest_ap(make_set({0, 1}));
  EXPECT_EQ(c.start, 0);
  EXPECT_EQ(c.difference, 1);
  EXPECT_EQ(c.length, 1);
  EXPECT_EQ(longest_ap(make_set({7})).length, 0);
}

TEST(ResidueClasses, Examples) {
  EXPECT_EQ(residue_classes(make_set({0, 2, 5}), 2), 2);
  EXPECT_EQ(residue_classes(make_set({0, 4, 10}), 2), 1);
  EXPECT_EQ(residue_classes(make_set({3, 8, 13, 14}), 1), 1);
  EXPECT_THROW(residue_classes(make_set({1}), 0), DomainError);
}

// Properties over random sets.

TEST(SumsetProperty, MatchesPairwiseOracle) {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 3000; ++i) {
    const auto a = oracle::random_values(rng, 64);
    const auto b = oracle::random_values(rng, 64);
    ASSERT_EQ(oracle::values(sumset::sumset(from(a), from(b))), oracle::pairwise_sum(a, b));
  }
}

TEST(SumsetProperty, WordBoundaryShifts) {
  // Shifts that land exactly on and around 64-bit word edges.
  for (Int s : {62, 63, 64, 65, 127, 128, 129, 191}) {
    const oracle::Values a{0, 1, 5, 63};
    const oracle::Values b{0, s};
    ASSERT_EQ(oracle::values(sumset::sumset(from(a), from(b))), oracle::pairwise_sum(a, b)) << s;
  }
}

TEST(SumsetProperty, SpanMinMaxAndSizeFloor) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const IntSet a = from(oracle::random_values(rng, 64));
    const IntSet b = from(oracle::random_values(rng, 64));
    const IntSet s = sumset::sumset(a, b);
    ASSERT_EQ(ell(s), ell(a) + ell(b));
    ASSERT_EQ(s.min(), a.min() + b.min());
    ASSERT_EQ(s.max(), a.max() + b.max());
    ASSERT_GE(s.size(), a.size() + b.size() - 1);
    ASSERT_EQ(s, sumset::sumset(b, a));
  }
}

TEST(KFoldProperty, EqualsRepeatedFamilySum) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 600; ++i) {
    const IntSet a = from(oracle::random_values(rng, 32));
    for (Int k = 1; k <= 8; ++k) {
      ASSERT_EQ(k_fold(a, k), family_sum(Family(static_cast<std::size_t>(k), a)));
    }
    ASSERT_EQ(oracle::values(k_fold(a, 5)), oracle::iterated_sum(oracle::values(a), 5));
  }
}

TEST(NormalizeProperty, IdempotentAndInvertible) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    auto v = oracle::random_values(rng, 40);
    const Int dil = std::uniform_int_distribution<Int>(1, 6)(rng);
    for (Int& x : v) x *= dil;
    const IntSet a = from(v);
    const Normalized n = normalize(a);
    ASSERT_EQ(normalize(n.set).set, n.set);
    ASSERT_EQ(n.set.min(), 0);
    if (a.size() >= 2) {
      ASSERT_EQ(n.divisor, oracle::gcd_of_differences(v));
      ASSERT_TRUE(is_primitive(n.set) || n.set.size() == 1);
    }
    for (Int x : n.set.elements()) ASSERT_TRUE(a.contains(x * n.divisor + n.offset));
  }
}

TEST(LongestBlockProperty, MatchesScanOracleAndBoundedByAp) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1500; ++i) {
    const auto v = oracle::random_values(rng, 60);
    const IntSet a = from(v);
    const Block b = longest_block(a);
    const auto [start, len] = oracle::longest_run(v);
    ASSERT_EQ(b.start, start);
    ASSERT_EQ(b.length, len);
    ASSERT_LE(b.length, longest_ap(a).length);
  }
}

TEST(LongestApProperty, MatchesBruteForceWithTieBreaks) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 800; ++i) {
    const auto v = oracle::random_values(rng, 40);
    const APWitness w = longest_ap(from(v));
    const auto [s, d, len] = oracle::longest_progression(v);
    ASSERT_EQ(w.length, len);
    if (len > 0) {
      ASSERT_EQ(w.difference, d);
      ASSERT_EQ(w.start, s);
    }
    for (Int j = 0; j <= w.length; ++j) ASSERT_TRUE(oracle::has(v, w.start + j * w.difference));
  }
}

TEST(ResidueClassesProperty, AtMostSizeAndModulus) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 2000; ++i) {
    const IntSet a = from(oracle::random_values(rng, 50));
    const Int m = std::uniform_int_distribution<Int>(1, 20)(rng);
    const Int h = residue_classes(a, m);
    ASSERT_GE(h, 1);
    ASSERT_LE(h, std::min<Int>(static_cast<Int>(a.size()), m));
  }
}

TEST(Ordering, LexicographicOnElements) {
  EXPECT_LT(make_set({0, 1, 3}), make_set({0, 2, 3}));
  EXPECT_LT(make_set({0, 1, 2}), make_set({0, 1, 2, 3}));
  EXPECT_LT(make_set({0, 1, 2, 3}), make_set({0, 1, 3}));
}

}  // namespace
