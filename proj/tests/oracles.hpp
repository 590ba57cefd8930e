#pragma once

// Slow reference implementations and random generators shared by the tests.
// Nothing here uses the library's bit-vector engine.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "sumset/int_set.hpp"

namespace oracle {

using sumset::Int;
using Values = std::vector<Int>;

inline Values values(const sumset::IntSet& a) { return {a.elements().begin(), a.elements().end()}; }

inline Values sorted_unique(Values v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline Values pairwise_sum(const Values& a, const Values& b) {
  std::set<Int> out;
  for (Int x : a)
    for (Int y : b) out.insert(x + y);
  return {out.begin(), out.end()};
}

inline Values iterated_sum(const Values& a, Int k) {
  Values acc = a;
  for (Int i = 1; i < k; ++i) acc = pairwise_sum(acc, a);
  return acc;
}

inline bool has(const Values& a, Int x) { return std::binary_search(a.begin(), a.end(), x); }

/// Longest run (terms - 1), leftmost on ties.
inline std::pair<Int, Int> longest_run(const Values& a) {
  Int best_start = a.front();
  Int best_len = 0;
  for (Int s : a) {
    if (has(a, s - 1)) continue;
    Int len = 0;
    while (has(a, s + len + 1)) ++len;
    if (len > best_len) {
      best_len = len;
      best_start = s;
    }
  }
  return {best_start, best_len};
}

/// Brute force over every (start, difference); returns (start, diff, length)
/// preferring longer, then smaller difference, then smaller start.
inline std::tuple<Int, Int, Int> longest_progression(const Values& a) {
  std::tuple<Int, Int, Int> best{a.front(), 1, 0};
  const Int span = a.back() - a.front();
  for (Int d = 1; d <= std::max<Int>(span, 1); ++d) {
    for (Int s : a) {
      Int len = 0;
      while (has(a, s + (len + 1) * d)) ++len;
      auto [bs, bd, bl] = best;
      if (len > bl || (len == bl && len > 0 && (d < bd || (d == bd && s < bs)))) best = {s, d, len};
    }
  }
  return best;
}

inline Int gcd_of_differences(const Values& a) {
  Int g = 0;
  for (Int x : a) g = std::gcd(g, x - a.front());
  return g;
}

/// Random subset of [lo, hi] by independent coin flips with density p; never empty.
inline Values random_values(std::mt19937_64& rng, Int lo, Int hi, double p) {
  std::bernoulli_distribution coin(p);
  Values v;
  for (Int x = lo; x <= hi; ++x)
    if (coin(rng)) v.push_back(x);
  if (v.empty()) v.push_back(std::uniform_int_distribution<Int>(lo, hi)(rng));
  return v;
}

inline Values random_values(std::mt19937_64& rng, Int max_span) {
  const Int lo = std::uniform_int_distribution<Int>(0, 8)(rng);
  const Int span = std::uniform_int_distribution<Int>(0, max_span)(rng);
  const double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
  return random_values(rng, lo, lo + span, p);
}

/// All subsets of [0, l] by bitmask, filtered by a predicate, sorted lexicographically.
template <typename Pred>
std::vector<Values> subsets_of_interval(Int l, Pred keep) {
  std::vector<Values> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (l + 1)); ++mask) {
    Values v;
    for (Int x = 0; x <= l; ++x)
      if (mask >> x & 1) v.push_back(x);
    if (keep(v)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
