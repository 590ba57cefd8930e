#pragma once

// Seeded generators for the randomized property runs. Every generator is a
// pure function of its seed.

#include <algorithm>
#include <cstdint>

#include "sumset/enumerate.hpp"
#include "sumset/int_set.hpp"

namespace sumset::instances {

struct BoxInstance {
  IntSet s1;
  IntSet s2;
  Int box1;
  Int box2;
};

struct PropInstance {
  Family family;
  Int n;
  Int l;
};

struct ClassesInstance {
  Family family;
  Int l;
};

namespace detail {

inline IntSet subset_of_box(Rng& rng, Int box, Int size) { return make_set(random_subset(rng, 0, box, size)); }

// Random set with min 0 and max `span`, `size` elements in total.
inline IntSet with_endpoints(Rng& rng, Int span, Int size) {
  if (span == 0) return make_set({0});
  std::vector<Int> v = random_subset(rng, 1, span - 1, std::min(size, span + 1) - 2);
  v.push_back(0);
  v.push_back(span);
  return make_set(v);
}

inline IntSet translated(const IntSet& a, Int offset) {
  std::vector<Int> v(a.elements().begin(), a.elements().end());
  for (Int& x : v) x += offset;
  return make_set(v);
}

}  // namespace detail

/// Two sets inside boxes [0,L1], [0,L2] with L <= max_span; three in four
/// draws are at least half full so the density hypothesis is often met.
inline BoxInstance random_box_instance(std::uint64_t seed, Int max_span = 64) {
  Rng rng(seed);
  const Int box1 = uniform_in(rng, 1, max_span);
  const Int box2 = uniform_in(rng, 1, max_span);
  const bool dense = uniform_below(rng, 4) != 0;
  auto size_for = [&](Int box) { return dense ? uniform_in(rng, (box + 1) / 2 + 1, box + 1) : uniform_in(rng, 1, box + 1); };
  const Int size1 = size_for(box1);
  const Int size2 = size_for(box2);
  return {detail::subset_of_box(rng, box1, size1), detail::subset_of_box(rng, box2, size2), box1, box2};
}

/// Up to max_k primitive sets with at least n elements and span at most l.
/// Parameters are biased toward the region where case (i) applies.
inline PropInstance random_prop_instance(std::uint64_t seed, Int max_span = 32, Int max_k = 6) {
  Rng rng(seed);
  const Int n = uniform_in(rng, 3, 10);
  const Int k = uniform_in(rng, 1, max_k);
  const Int lo = n - 1;
  const Int reach = std::clamp<Int>((k + 1) * (n - 2) + 1, lo, max_span);
  const Int l = uniform_below(rng, 5) != 0 ? uniform_in(rng, lo, reach) : uniform_in(rng, lo, max_span);
  Family family;
  for (Int i = 0; i < k; ++i) {
    for (;;) {
      const Int span = uniform_in(rng, n - 1, l);
      const Int size = uniform_in(rng, n, span + 1);
      const IntSet a = detail::with_endpoints(rng, span, size);
      if (!is_primitive(a)) continue;
      family.push_back(detail::translated(a, uniform_in(rng, 0, 3)));
      break;
    }
  }
  return {std::move(family), n, l};
}

/// k in [2, max_k] sets ordered so the last has the largest span and is
/// primitive; a quarter of the others share that span.
inline Family random_growth_instance(std::uint64_t seed, Int max_span = 32, Int max_k = 5) {
  Rng rng(seed);
  const Int k = uniform_in(rng, 2, max_k);
  const Int span = uniform_in(rng, 1, max_span);
  Family family;
  for (Int i = 0; i + 1 < k; ++i) {
    const Int s = uniform_below(rng, 4) == 0 ? span : uniform_in(rng, 0, span);
    const IntSet a = detail::with_endpoints(rng, s, uniform_in(rng, std::min<Int>(2, s + 1), s + 1));
    family.push_back(detail::translated(a, uniform_in(rng, 0, 5)));
  }
  for (;;) {
    const IntSet last = detail::with_endpoints(rng, span, uniform_in(rng, 2, span + 1));
    if (!is_primitive(last)) continue;
    family.push_back(detail::translated(last, uniform_in(rng, 0, 5)));
    break;
  }
  return family;
}

/// Arbitrary sets; half of the time the last one is a dilate so d > 1.
/// l is a uniformly chosen positive difference of the last set.
inline ClassesInstance random_classes_instance(std::uint64_t seed, Int max_span = 32, Int max_k = 5) {
  Rng rng(seed);
  const Int k = uniform_in(rng, 2, max_k);
  Family family;
  for (Int i = 0; i + 1 < k; ++i) {
    const Int s = uniform_in(rng, 0, max_span);
    const IntSet a = detail::with_endpoints(rng, s, uniform_in(rng, std::min<Int>(2, s + 1), s + 1));
    family.push_back(detail::translated(a, uniform_in(rng, 0, 5)));
  }
  const Int dilation = uniform_below(rng, 2) == 0 ? 1 : uniform_in(rng, 2, 5);
  const Int span = uniform_in(rng, 1, std::max<Int>(1, max_span / dilation));
  const IntSet base = detail::with_endpoints(rng, span, uniform_in(rng, 2, span + 1));
  std::vector<Int> v;
  for (Int x : base.elements()) v.push_back(x * dilation);
  const IntSet last = detail::translated(make_set(v), uniform_in(rng, 0, 5));
  family.push_back(last);

  const auto e = last.elements();
  const auto i = static_cast<std::size_t>(uniform_below(rng, e.size() - 1));
  const auto j = static_cast<std::size_t>(uniform_in(rng, static_cast<Int>(i) + 1, static_cast<Int>(e.size()) - 1));
  return {std::move(family), e[j] - e[i]};
}

}  // namespace sumset::instances
