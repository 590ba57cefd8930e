#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sumset/enumerate.hpp"

using namespace sumset;

namespace {

FamilySpec sets_spec(Int n, Int l, bool endpoints, bool primitive) {
  FamilySpec s;
  s.n_min = n;
  s.l = l;
  s.require_endpoints = endpoints;
  s.require_primitive = primitive;
  return s;
}

std::vector<oracle::Values> as_values(const std::vector<IntSet>& sets) {
  std::vector<oracle::Values> out;
  for (const IntSet& a : sets) out.push_back(oracle::values(a));
  return out;
}

TEST(EnumSets, Examples) {
  EXPECT_EQ(as_values(enum_sets(sets_spec(3, 3, true, true))),
            (std::vector<oracle::Values>{{0, 1, 3}, {0, 2, 3}}));
  EXPECT_EQ(as_values(enum_sets(sets_spec(2, 1, true, false))), (std::vector<oracle::Values>{{0, 1}}));
  EXPECT_EQ(as_values(enum_sets(sets_spec(3, 4, true, true))),
            (std::vector<oracle::Values>{{0, 1, 4}, {0, 3, 4}}));
}

TEST(EnumSets, CapIsEnforced) {
  EXPECT_THROW(enum_sets(sets_spec(10, 40, false, false), 1000), CapExceeded);
  EXPECT_THROW(count_admissible(sets_spec(10, 40, false, false), 1000), CapExceeded);
}

TEST(EnumSetsProperty, MatchesBitmaskOracle) {
  for (Int l = 1; l <= 11; ++l)
    for (Int n = 1; n <= l + 1; ++n)
      for (int flags = 0; flags < 4; ++flags) {
        const bool endpoints = flags & 1;
        const bool primitive = flags & 2;
        if (endpoints && n < 2) continue;
        for (Int n_max : {Int{0}, std::min<Int>(n + 2, l + 1)}) {
          FamilySpec spec = sets_spec(n, l, endpoints, primitive);
          spec.n_max = n_max;
          const Int top = n_max == 0 ? n : n_max;
          const auto expected = oracle::subsets_of_interval(l, [&](const oracle::Values& v) {
            const auto sz = static_cast<Int>(v.size());
            if (sz < n || sz > top) return false;
            if (endpoints && (v.front() != 0 || v.back() != l)) return false;
            if (primitive && (v.size() < 2 || oracle::gcd_of_differences(v) != 1)) return false;
            return true;
          });
          const auto got = enum_sets(spec);
          ASSERT_EQ(as_values(got), expected) << spec.to_string();
          ASSERT_EQ(count_admissible(spec), expected.size());
          for (const IntSet& a : got) ASSERT_TRUE(spec.admits(a));
        }
      }
}

TEST(EnumFamilies, Examples) {
  FamilySpec spec = sets_spec(3, 3, true, true);
  spec.k = 2;
  spec.canonical = true;
  auto cursor = enum_families(spec);
  std::vector<Family> got;
  while (auto f = cursor.next()) got.push_back(*f);
  const IntSet a = make_set({0, 1, 3});
  const IntSet b = make_set({0, 2, 3});
  EXPECT_EQ(got, (std::vector<Family>{{a, a}, {a, b}, {b, b}}));
  EXPECT_EQ(count_admissible(spec), 3U);

  spec.k = 5;
  spec.identical = true;
  EXPECT_EQ(count_admissible(spec), 2U);
  auto id = enum_families(spec);
  EXPECT_EQ(*id.next(), Family(5, a));
  EXPECT_EQ(*id.next(), Family(5, b));
  EXPECT_FALSE(id.next());
}

TEST(EnumFamilies, KOneIsTheSetStream) {
  const FamilySpec spec = sets_spec(3, 6, false, true);
  auto cursor = enum_families(spec);
  for (const IntSet& a : enum_sets(spec)) EXPECT_EQ(*cursor.next(), Family{a});
  EXPECT_FALSE(cursor.next());
}

TEST(EnumFamiliesProperty, CanonicalCountAndOrder) {
  for (Int k = 1; k <= 4; ++k) {
    FamilySpec spec = sets_spec(3, 5, false, true);
    spec.k = k;
    spec.canonical = true;
    const FamilySpace space(spec);
    const auto b = space.base().size();
    ASSERT_EQ(space.count(), multichoose(b, static_cast<std::uint64_t>(k)));
    auto cursor = enum_families(spec);
    std::optional<Family> prev;
    std::uint64_t seen = 0;
    while (auto f = cursor.next()) {
      ASSERT_TRUE(std::is_sorted(f->begin(), f->end()));
      if (prev) {
        ASSERT_LT(*prev, *f);
      }
      ASSERT_EQ(*f, space.at(seen));
      prev = f;
      ++seen;
    }
    ASSERT_EQ(seen, space.count());
  }
}

TEST(EnumFamiliesProperty, OrderedTuplesCountPower) {
  FamilySpec spec = sets_spec(2, 3, false, false);
  spec.k = 3;
  const FamilySpace space(spec);
  const auto b = space.base().size();
  EXPECT_EQ(space.count(), b * b * b);
  std::set<Family> distinct;
  for (std::uint64_t i = 0; i < space.count(); ++i) distinct.insert(space.at(i));
  EXPECT_EQ(distinct.size(), space.count());
}

TEST(EnumFamiliesProperty, ResumeSkipsExactlyPosition) {
  FamilySpec spec = sets_spec(3, 6, true, true);
  spec.k = 3;
  spec.canonical = true;
  auto full = enum_families(spec);
  std::vector<Family> all;
  while (auto f = full.next()) all.push_back(*f);
  for (std::uint64_t p = 0; p <= all.size(); p += 3) {
    auto resumed = enum_families(spec, p);
    for (std::uint64_t i = p; i < all.size(); ++i) ASSERT_EQ(*resumed.next(), all[i]);
    ASSERT_FALSE(resumed.next());
  }
}

TEST(Counting, Helpers) {
  EXPECT_EQ(binomial(5, 2), 10U);
  EXPECT_EQ(binomial(2, 5), 0U);
  EXPECT_EQ(multichoose(2, 2), 3U);
  EXPECT_EQ(multichoose(4, 3), 20U);
  EXPECT_EQ(binomial(200, 100), std::numeric_limits<std::uint64_t>::max());
}

TEST(RandomFamily, Examples) {
  FamilySpec forced = sets_spec(2, 1, true, false);
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL, 123456789ULL})
    EXPECT_EQ(random_family(forced, seed), Family{make_set({0, 1})});

  FamilySpec spec = sets_spec(3, 6, false, false);
  spec.k = 3;
  EXPECT_EQ(random_family(spec, 1), random_family(spec, 1));
  for (const IntSet& a : random_family(spec, 1)) EXPECT_TRUE(spec.admits(a));
}

TEST(RandomFamily, FrozenStream) {
  // The generator is hand-rolled on mt19937_64, so streams are portable.
  FamilySpec spec = sets_spec(3, 10, true, true);
  spec.k = 2;
  const Family first = random_family(spec, 42);
  EXPECT_EQ(first, random_family(spec, 42));
  EXPECT_NE(first, random_family(spec, 43));
}

TEST(RandomFamily, UnsatisfiableSpecIsReported) {
  FamilySpec spec = sets_spec(2, 2, true, true);
  spec.n_max = 2;  // only {0,2}, never primitive
  EXPECT_THROW(random_family(spec, 5), Error);
}

TEST(RandomFamilyProperty, AlwaysAdmissible) {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const Int n = 3 + static_cast<Int>(seed % 4);
    FamilySpec spec = sets_spec(n, 8 + static_cast<Int>(seed % 9), seed % 2 == 0, true);
    spec.k = 1 + static_cast<Int>(seed % 5);
    spec.canonical = seed % 3 == 0;
    spec.identical = seed % 7 == 0;
    const Family f = random_family(spec, seed);
    ASSERT_EQ(static_cast<Int>(f.size()), spec.k);
    for (const IntSet& a : f) ASSERT_TRUE(spec.admits(a));
    if (spec.canonical) {
      ASSERT_TRUE(std::is_sorted(f.begin(), f.end()));
    }
    if (spec.identical) {
      ASSERT_TRUE(std::all_of(f.begin(), f.end(), [&](const IntSet& a) { return a == f[0]; }));
    }
  }
}

TEST(RandomSubset, UniformEnough) {
  // Every 2-subset of [0,4] appears with roughly equal frequency.
  Rng rng(7);
  std::map<std::vector<Int>, int> hist;
  for (int i = 0; i < 20000; ++i) ++hist[random_subset(rng, 0, 4, 2)];
  ASSERT_EQ(hist.size(), 10U);
  for (const auto& [subset, count] : hist) {
    EXPECT_GT(count, 1700);
    EXPECT_LT(count, 2300);
  }
}

}  // namespace
