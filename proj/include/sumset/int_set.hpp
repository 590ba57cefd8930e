#pragma once

// Finite sets of non-negative integers with a sorted-list view and a
// bit-vector view kept in sync, plus the sumset engine built on them.

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sumset/errors.hpp"
#include "sumset/numeric.hpp"

namespace sumset {

using Word = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

namespace detail {

inline std::size_t words_for(std::uint64_t nbits) {
  return static_cast<std::size_t>((nbits + word_bits - 1) / word_bits);
}

inline void check_universe(std::uint64_t nbits) {
  if (nbits > config::universe_bits())
    throw ValidationError(ValidationError::Reason::universe_exceeded,
                          "set needs " + std::to_string(nbits) + " bits, universe cap is " +
                              std::to_string(config::universe_bits()));
}

// dst |= src << shift. dst must be large enough to hold the top set bit of
// src after shifting.
inline void or_shifted(std::span<Word> dst, std::span<const Word> src, std::uint64_t shift) {
  const std::size_t ws = static_cast<std::size_t>(shift / word_bits);
  const unsigned bs = static_cast<unsigned>(shift % word_bits);
  for (std::size_t i = 0; i < src.size(); ++i) {
    const Word w = src[i];
    if (w == 0) continue;
    dst[i + ws] |= w << bs;
    if (bs != 0) {
      const Word carry = w >> (word_bits - bs);
      if (carry != 0) dst[i + ws + 1] |= carry;
    }
  }
}

}  // namespace detail

/// A run {start, ..., start + length}; length counts terms minus one.
struct Block {
  Int start = 0;
  Int length = 0;

  Int last() const noexcept { return start + length; }
  friend bool operator==(const Block&, const Block&) = default;
  std::string to_string() const {
    return "Block(start=" + std::to_string(start) + ", length=" + std::to_string(length) + ")";
  }
};

/// start + j * difference for j in [0, length] all lie in the witnessing set.
struct APWitness {
  Int start = 0;
  Int difference = 1;
  Int length = 0;

  friend bool operator==(const APWitness&, const APWitness&) = default;
  std::string to_string() const {
    return "AP(start=" + std::to_string(start) + ", difference=" + std::to_string(difference) +
           ", length=" + std::to_string(length) + ")";
  }
};

class IntSet {
 public:
  /// Builds from raw values: dedups, sorts, validates.
  static IntSet from_values(std::span<const Int> values) {
    if (values.empty())
      throw ValidationError(ValidationError::Reason::empty_set, "empty set");
    std::vector<Int> elems(values.begin(), values.end());
    for (Int v : elems)
      if (v < 0)
        throw ValidationError(ValidationError::Reason::negative_value,
                              "negative value " + std::to_string(v));
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    detail::check_universe(static_cast<std::uint64_t>(elems.back()) + 1);
    return IntSet(std::move(elems));
  }

  /// Builds from a bit-vector; bits beyond nbits must be clear.
  static IntSet from_bits(std::vector<Word> words) {
    std::vector<Int> elems;
    for (std::size_t i = 0; i < words.size(); ++i) {
      Word w = words[i];
      while (w != 0) {
        const int b = std::countr_zero(w);
        elems.push_back(static_cast<Int>(i * word_bits + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
    if (elems.empty()) throw ValidationError(ValidationError::Reason::empty_set, "empty set");
    words.resize(detail::words_for(static_cast<std::uint64_t>(elems.back()) + 1));
    return IntSet(std::move(elems), std::move(words));
  }

  /// Closed interval [lo, hi] as a set.
  static IntSet interval(Int lo, Int hi) {
    if (hi < lo) throw ValidationError(ValidationError::Reason::empty_set, "empty set");
    std::vector<Int> v(static_cast<std::size_t>(hi - lo + 1));
    std::iota(v.begin(), v.end(), lo);
    return from_values(v);
  }

  std::span<const Int> elements() const noexcept { return elements_; }
  std::span<const Word> words() const noexcept { return words_; }
  std::size_t size() const noexcept { return elements_.size(); }
  Int min() const noexcept { return elements_.front(); }
  Int max() const noexcept { return elements_.back(); }

  bool contains(Int x) const noexcept {
    if (x < 0 || x > max()) return false;
    const auto u = static_cast<std::uint64_t>(x);
    return (words_[u / word_bits] >> (u % word_bits)) & 1U;
  }

  /// True when both views describe the same set.
  bool consistent() const {
    std::size_t pop = 0;
    for (Word w : words_) pop += static_cast<std::size_t>(std::popcount(w));
    if (pop != elements_.size()) return false;
    if (!std::is_sorted(elements_.begin(), elements_.end())) return false;
    for (std::size_t i = 1; i < elements_.size(); ++i)
      if (elements_[i - 1] == elements_[i]) return false;
    return std::all_of(elements_.begin(), elements_.end(), [&](Int x) { return contains(x); });
  }

  /// Translate by -shift; every element must stay non-negative.
  IntSet shifted_down(Int shift) const {
    std::vector<Int> v(elements_.begin(), elements_.end());
    for (Int& x : v) x -= shift;
    return from_values(v);
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (i != 0) s += ',';
      s += std::to_string(elements_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const IntSet& a, const IntSet& b) { return a.elements_ == b.elements_; }
  friend std::strong_ordering operator<=>(const IntSet& a, const IntSet& b) {
    return std::lexicographical_compare_three_way(a.elements_.begin(), a.elements_.end(),
                                                  b.elements_.begin(), b.elements_.end());
  }

 private:
  explicit IntSet(std::vector<Int> elems) : elements_(std::move(elems)) {
    words_.assign(detail::words_for(static_cast<std::uint64_t>(elements_.back()) + 1), 0);
    for (Int x : elements_) {
      const auto u = static_cast<std::uint64_t>(x);
      words_[u / word_bits] |= Word{1} << (u % word_bits);
    }
    assert(consistent());
  }

  IntSet(std::vector<Int> elems, std::vector<Word> words)
      : elements_(std::move(elems)), words_(std::move(words)) {}

  std::vector<Int> elements_;
  std::vector<Word> words_;
};

using Family = std::vector<IntSet>;

inline IntSet make_set(std::span<const Int> values) { return IntSet::from_values(values); }

inline IntSet make_set(std::initializer_list<Int> values) {
  return IntSet::from_values(std::span<const Int>(values.begin(), values.size()));
}

inline std::string to_string(const Family& family) {
  std::string s = "[";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i != 0) s += ',';
    s += family[i].to_string();
  }
  return s + "]";
}

/// Span: largest minus smallest element.
inline Int ell(const IntSet& a) { return a.max() - a.min(); }

/// gcd of consecutive differences; the largest d with A inside an AP of
/// difference d. Singletons are rejected.
inline Int ap_difference(const IntSet& a) {
  if (a.size() < 2) throw DomainError("ap_difference of a singleton is unbounded");
  const auto e = a.elements();
  Int g = 0;
  for (std::size_t i = 1; i < e.size(); ++i) g = std::gcd(g, e[i] - e[i - 1]);
  return g;
}

/// Not contained in an arithmetic progression with difference > 1.
inline bool is_primitive(const IntSet& a) { return a.size() >= 2 && ap_difference(a) == 1; }

struct Normalized {
  IntSet set;
  Int offset;
  Int divisor;
};

inline Normalized normalize(const IntSet& a) {
  const Int offset = a.min();
  const Int d = a.size() == 1 ? 1 : ap_difference(a);
  std::vector<Int> v(a.elements().begin(), a.elements().end());
  for (Int& x : v) x = (x - offset) / d;
  return {IntSet::from_values(v), offset, d};
}

inline IntSet sumset(const IntSet& a, const IntSet& b) {
  const std::uint64_t top = static_cast<std::uint64_t>(a.max()) + static_cast<std::uint64_t>(b.max());
  if (top < static_cast<std::uint64_t>(a.max()))
    throw OverflowError("sumset exceeds 64-bit range");
  detail::check_universe(top + 1);
  const IntSet& shifts = a.size() <= b.size() ? a : b;
  const IntSet& body = a.size() <= b.size() ? b : a;
  std::vector<Word> out(detail::words_for(top + 1), 0);
  for (Int s : shifts.elements()) detail::or_shifted(out, body.words(), static_cast<std::uint64_t>(s));
  return IntSet::from_bits(std::move(out));
}

/// kA by binary doubling.
inline IntSet k_fold(const IntSet& a, Int k) {
  if (k < 1) throw DomainError("k_fold needs k >= 1");
  checked::mul(a.max(), k);
  detail::check_universe(static_cast<std::uint64_t>(a.max()) * static_cast<std::uint64_t>(k) + 1);
  IntSet base = a;
  std::optional<IntSet> acc;
  for (;;) {
    if (k & 1) acc = acc ? sumset(*acc, base) : base;
    k >>= 1;
    if (k == 0) break;
    base = sumset(base, base);
  }
  return *acc;
}

inline IntSet family_sum(std::span<const IntSet> family) {
  if (family.empty()) throw DomainError("family_sum of an empty family");
  IntSet acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = sumset(acc, family[i]);
  return acc;
}

/// Leftmost longest run of consecutive elements.
inline Block longest_block(const IntSet& a) {
  const auto e = a.elements();
  Block best{e[0], 0};
  Block cur = best;
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] == e[i - 1] + 1) {
      ++cur.length;
    } else {
      cur = {e[i], 0};
    }
    if (cur.length > best.length) best = cur;
  }
  return best;
}

/// The maximal run of `a` that contains x; empty interval at x if x is absent.
inline Interval run_containing(const IntSet& a, Int x) {
  if (!a.contains(x)) return {x, x - 1};
  Int lo = x;
  Int hi = x;
  while (a.contains(lo - 1)) --lo;
  while (a.contains(hi + 1)) ++hi;
  return {lo, hi};
}

/// Longest AP inside `a`; ties go to the smallest difference, then the
/// smallest start. Quadratic in the span.
inline APWitness longest_ap(const IntSet& a) {
  APWitness best{a.min(), 1, 0};
  const Int span = ell(a);
  for (Int d = 1; d <= span; ++d) {
    // Every element starts at most one maximal chain per difference.
    for (Int s : a.elements()) {
      if (a.contains(s - d)) continue;
      Int len = 0;
      while (a.contains(s + (len + 1) * d)) ++len;
      if (len > best.length) best = {s, d, len};
    }
    if (best.length >= span / d) break;
  }
  return best;
}

inline Int residue_classes(const IntSet& a, Int m) {
  if (m < 1) throw DomainError("residue_classes needs m >= 1");
  std::vector<Int> r;
  r.reserve(a.size());
  for (Int x : a.elements()) r.push_back(x % m);
  std::sort(r.begin(), r.end());
  return static_cast<Int>(std::unique(r.begin(), r.end()) - r.begin());
}

}  // namespace sumset
