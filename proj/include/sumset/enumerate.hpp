#pragma once

// Deterministic enumeration of constrained sets and families with random
// access by ordinal, plus seeded random generation.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sumset/errors.hpp"
#include "sumset/int_set.hpp"

namespace sumset {

/// Saturating binomial coefficient.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

/// Number of non-decreasing k-tuples over `base` values.
inline std::uint64_t multichoose(std::uint64_t base, std::uint64_t k) {
  if (k == 0) return 1;
  if (base == 0) return 0;
  return binomial(base + k - 1, k);
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t k) {
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r *= base;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

/// Calls f(span of chosen values) for every `size`-subset of [lo, hi] in
/// lexicographic order. Stops early when f returns false.
template <typename F>
bool for_each_combination(Int lo, Int hi, Int size, F&& f) {
  if (size < 0 || hi - lo + 1 < size) return true;
  std::vector<Int> c(static_cast<std::size_t>(size));
  for (Int i = 0; i < size; ++i) c[static_cast<std::size_t>(i)] = lo + i;
  for (;;) {
    if (!f(std::span<const Int>(c))) return false;
    Int i = size - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == hi - (size - 1 - i)) --i;
    if (i < 0) return true;
    ++c[static_cast<std::size_t>(i)];
    for (Int j = i + 1; j < size; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

struct FamilySpec {
  Int k = 1;
  Int n_min = 2;
  Int l = 1;
  bool require_endpoints = false;
  bool require_primitive = false;
  bool identical = false;
  bool canonical = false;
  /// Largest admitted set size; 0 means exactly n_min.
  Int n_max = 0;

  Int max_size() const { return std::min(n_max == 0 ? n_min : n_max, l + 1); }

  void validate() const {
    if (k < 1) throw DomainError("family size k must be >= 1");
    if (n_min < 1) throw DomainError("n_min must be >= 1");
    if (l < 0) throw DomainError("l must be >= 0");
    if (n_max != 0 && n_max < n_min) throw DomainError("n_max must be >= n_min");
    if (require_endpoints && (n_min < 2 || l < 1))
      throw DomainError("endpoint constraint needs n_min >= 2 and l >= 1");
  }

  /// Independent re-check of the per-set predicates.
  bool admits(const IntSet& a) const {
    const auto sz = static_cast<Int>(a.size());
    if (sz < n_min || sz > max_size()) return false;
    if (a.max() > l) return false;
    if (require_endpoints && (a.min() != 0 || a.max() != l)) return false;
    if (require_primitive && !is_primitive(a)) return false;
    return true;
  }

  std::string to_string() const {
    return "k=" + std::to_string(k) + ";n=" + std::to_string(n_min) +
           (n_max != 0 ? ";n_max=" + std::to_string(n_max) : "") + ";l=" + std::to_string(l) +
           (require_endpoints ? ";endpoints" : "") + (require_primitive ? ";primitive" : "") +
           (identical ? ";identical" : "") + (canonical ? ";canonical" : "");
  }
};

/// Admissible single sets of `spec`, lexicographic in their element lists.
inline std::vector<IntSet> enum_sets(const FamilySpec& spec,
                                     std::uint64_t cap = config::default_enum_cap) {
  spec.validate();
  std::uint64_t candidates = 0;
  for (Int s = spec.n_min; s <= spec.max_size(); ++s) {
    const std::uint64_t c = spec.require_endpoints
                                ? (s >= 2 ? binomial(static_cast<std::uint64_t>(spec.l - 1),
                                                     static_cast<std::uint64_t>(s - 2))
                                          : 0)
                                : binomial(static_cast<std::uint64_t>(spec.l + 1), static_cast<std::uint64_t>(s));
    candidates = c > cap ? cap + 1 : candidates + c;
    if (candidates > cap)
      throw CapExceeded("enumeration of " + spec.to_string() + " exceeds cap " + std::to_string(cap));
  }

  std::vector<IntSet> out;
  for (Int s = spec.n_min; s <= spec.max_size(); ++s) {
    auto keep = [&](std::vector<Int> v) {
      IntSet a = make_set(v);
      if (!spec.require_primitive || is_primitive(a)) out.push_back(std::move(a));
      return true;
    };
    if (spec.require_endpoints) {
      for_each_combination(1, spec.l - 1, s - 2, [&](std::span<const Int> interior) {
        std::vector<Int> v{0};
        v.insert(v.end(), interior.begin(), interior.end());
        v.push_back(spec.l);
        return keep(std::move(v));
      });
    } else {
      for_each_combination(0, spec.l, s, [&](std::span<const Int> c) {
        return keep(std::vector<Int>(c.begin(), c.end()));
      });
    }
  }
  // Lexicographic over element lists, so mixed sizes interleave as
  // {0,1,2} < {0,1,2,3} < {0,1,3}.
  std::sort(out.begin(), out.end());
  return out;
}

/// Random-access view of the family stream of a spec.
class FamilySpace {
 public:
  explicit FamilySpace(FamilySpec spec, std::uint64_t cap = config::default_enum_cap)
      : spec_(spec), base_(enum_sets(base_spec(spec), cap)) {
    const auto b = static_cast<std::uint64_t>(base_.size());
    const auto k = static_cast<std::uint64_t>(spec_.k);
    if (spec_.identical || spec_.k == 1) {
      count_ = b;
    } else if (spec_.canonical) {
      count_ = multichoose(b, k);
    } else {
      count_ = saturating_pow(b, k);
    }
    if (count_ > cap)
      throw CapExceeded("family space " + spec_.to_string() + " has more than " + std::to_string(cap) +
                        " members");
  }

  const FamilySpec& spec() const noexcept { return spec_; }
  const std::vector<IntSet>& base() const noexcept { return base_; }
  std::uint64_t count() const noexcept { return count_; }

  /// Base-set indices of the family at `ordinal`.
  std::vector<std::size_t> unrank(std::uint64_t ordinal) const {
    if (ordinal >= count_) throw DomainError("ordinal past the end of the family stream");
    const auto k = static_cast<std::size_t>(spec_.k);
    const std::size_t b = base_.size();
    std::vector<std::size_t> idx(k, 0);
    if (spec_.identical || k == 1) {
      std::fill(idx.begin(), idx.end(), static_cast<std::size_t>(ordinal));
    } else if (spec_.canonical) {
      std::size_t v = 0;
      for (std::size_t p = 0; p < k; ++p) {
        for (;; ++v) {
          const std::uint64_t completions = multichoose(b - v, k - p - 1);
          if (ordinal < completions) break;
          ordinal -= completions;
        }
        idx[p] = v;
      }
    } else {
      for (std::size_t p = k; p-- > 0;) {
        idx[p] = static_cast<std::size_t>(ordinal % b);
        ordinal /= b;
      }
    }
    return idx;
  }

  Family at(std::uint64_t ordinal) const { return materialize(unrank(ordinal)); }

  Family materialize(const std::vector<std::size_t>& idx) const {
    Family f;
    f.reserve(idx.size());
    for (std::size_t i : idx) f.push_back(base_[i]);
    return f;
  }

  /// Advances `idx` to the next family in stream order; false at the end.
  bool advance(std::vector<std::size_t>& idx) const {
    const std::size_t b = base_.size();
    if (spec_.identical || idx.size() == 1) {
      if (idx[0] + 1 >= b) return false;
      std::fill(idx.begin(), idx.end(), idx[0] + 1);
      return true;
    }
    std::size_t p = idx.size();
    while (p > 0 && idx[p - 1] + 1 >= b) --p;
    if (p == 0) return false;
    ++idx[p - 1];
    const std::size_t fill = spec_.canonical ? idx[p - 1] : 0;
    for (std::size_t j = p; j < idx.size(); ++j) idx[j] = fill;
    return true;
  }

 private:
  static FamilySpec base_spec(FamilySpec s) {
    s.k = 1;
    return s;
  }

  FamilySpec spec_;
  std::vector<IntSet> base_;
  std::uint64_t count_ = 0;
};

/// Resumable cursor over a family stream; position counts emitted families.
class EnumCursor {
 public:
  EnumCursor(std::shared_ptr<const FamilySpace> space, std::uint64_t position = 0)
      : space_(std::move(space)), position_(position) {
    if (position_ < space_->count()) idx_ = space_->unrank(position_);
  }

  std::uint64_t position() const noexcept { return position_; }
  const FamilySpec& spec() const noexcept { return space_->spec(); }

  std::optional<Family> next() {
    if (position_ >= space_->count()) return std::nullopt;
    Family f = space_->materialize(idx_);
    ++position_;
    if (position_ < space_->count()) space_->advance(idx_);
    return f;
  }

 private:
  std::shared_ptr<const FamilySpace> space_;
  std::uint64_t position_;
  std::vector<std::size_t> idx_;
};

inline EnumCursor enum_families(const FamilySpec& spec, std::uint64_t position = 0,
                                std::uint64_t cap = config::default_enum_cap) {
  return EnumCursor(std::make_shared<const FamilySpace>(spec, cap), position);
}

inline std::uint64_t count_admissible(const FamilySpec& spec,
                                      std::uint64_t cap = config::default_enum_cap) {
  return FamilySpace(spec, cap).count();
}

// ---------------------------------------------------------------------------
// Random generation. The standard distributions are implementation-defined,
// so draws are done by hand on top of mt19937_64 to keep streams portable.

using Rng = std::mt19937_64;

/// splitmix64 finalizer; derives independent per-unit seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Uniform in [0, bound).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

inline Int uniform_in(Rng& rng, Int lo, Int hi) {
  return lo + static_cast<Int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// Uniform `size`-subset of [lo, hi] (Floyd's algorithm).
inline std::vector<Int> random_subset(Rng& rng, Int lo, Int hi, Int size) {
  std::vector<Int> out;
  const Int range = hi - lo + 1;
  for (Int j = range - size; j < range; ++j) {
    const Int t = uniform_in(rng, 0, j);
    const bool seen = std::find(out.begin(), out.end(), lo + t) != out.end();
    out.push_back(seen ? lo + j : lo + t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline constexpr int default_rejection_budget = 100'000;

/// One admissible set drawn for `spec`; size uniform in [n_min, max_size].
inline IntSet random_admissible_set(Rng& rng, const FamilySpec& spec,
                                    int budget = default_rejection_budget) {
  for (int attempt = 0; attempt < budget; ++attempt) {
    const Int size = uniform_in(rng, spec.n_min, spec.max_size());
    std::vector<Int> v;
    if (spec.require_endpoints) {
      v = random_subset(rng, 1, spec.l - 1, size - 2);
      v.push_back(0);
      v.push_back(spec.l);
    } else {
      v = random_subset(rng, 0, spec.l, size);
    }
    IntSet a = make_set(v);
    if (spec.admits(a)) return a;
  }
  throw Error("rejection budget exhausted for " + spec.to_string());
}

inline Family random_family(const FamilySpec& spec, std::uint64_t seed) {
  spec.validate();
  if (spec.max_size() < spec.n_min || (spec.require_endpoints && spec.n_min > spec.l + 1))
    throw Error("unsatisfiable family spec " + spec.to_string());
  Rng rng(seed);
  Family f;
  if (spec.identical) {
    const IntSet a = random_admissible_set(rng, spec);
    f.assign(static_cast<std::size_t>(spec.k), a);
  } else {
    for (Int i = 0; i < spec.k; ++i) f.push_back(random_admissible_set(rng, spec));
    if (spec.canonical) std::sort(f.begin(), f.end());
  }
  return f;
}

}  // namespace sumset
