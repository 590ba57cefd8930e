#pragma once

// Closed-form thresholds and bounds on blocks of consecutive integers in
// sumsets. All arithmetic is exact; overflow raises OverflowError.

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sumset/int_set.hpp"
#include "sumset/numeric.hpp"

namespace sumset {

namespace detail {
inline void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}
}  // namespace detail

/// ceil((l + 1) / (n - 1)); threshold for l consecutive multiples of d in kA.
inline Int kappa_sarkozy(Int n, Int l) {
  detail::require(n >= 2 && l >= n, "kappa_sarkozy needs n >= 2 and l >= n");
  return ceil_div(checked::add(l, 1), n - 1);
}

/// floor((l - 1) / (n - 2)); threshold for identical summands with 0, l in A.
inline Int kappa_lev(Int n, Int l) {
  detail::require(n >= 3 && l >= n - 1, "kappa_lev needs n >= 3 and l >= n - 1");
  return floor_div(l - 1, n - 2);
}

/// ceil((l - 1) / (n - 2)) - 1; 2 * kappa_main + 1 distinct summands suffice.
/// l = 1 would give -1 summand pairs and is rejected.
inline Int kappa_main(Int n, Int l) {
  detail::require(n >= 3 && l >= 2, "kappa_main needs n >= 3 and l >= 2");
  return ceil_div(l - 1, n - 2) - 1;
}

struct KappaTriple {
  Int kappa_sarkozy;
  Int kappa_lev;
  Int kappa_main;
};

/// Interval [a, kl - a] contained in kA, a = kappa(2l - 2 - (kappa + 1)(n - 2)).
inline Interval lev_interval(Int n, Int l, Int k) {
  const Int kappa = kappa_lev(n, l);
  if (k < 2 * kappa)
    throw PreconditionError("lev_interval needs k >= 2*kappa = " + std::to_string(2 * kappa));
  const Int inner = checked::sub(checked::mul(2, l) - 2, checked::mul(kappa + 1, n - 2));
  const Int a = checked::mul(kappa, inner);
  return {a, checked::sub(checked::mul(k, l), a)};
}

/// 2(kappa + 1)(n - 1) - l for kappa = kappa_main(n, l). Never below l and
/// strictly above l whenever kappa >= 1.
inline Int main_block_length(Int n, Int l) {
  const Int kappa = kappa_main(n, l);
  const Int len = checked::sub(checked::mul(checked::mul(2, kappa + 1), n - 1), l);
  if (len < l || (kappa >= 1 && len <= l))
    throw std::logic_error("main_block_length(" + std::to_string(n) + "," + std::to_string(l) +
                           ") = " + std::to_string(len) + " breaks its bound");
  return len;
}

/// Number of summands from which k(n-1) is guaranteed: 2 ceil((l-1)/(n-2)).
inline Int corollary_threshold(Int n, Int l) {
  detail::require(n >= 3 && l >= 1, "corollary_threshold needs n >= 3 and l >= 1");
  return checked::mul(2, ceil_div(l - 1, n - 2));
}

inline Int corollary_block_length(Int n, Int k) {
  detail::require(n >= 3 && k >= 1, "corollary_block_length needs n >= 3 and k >= 1");
  return checked::mul(k, n - 1);
}

/// Smallest k for which f(n,k,l) = k(n-1) is known: 2 floor((l-2)/(n-2)) + 2.
inline Int f_exact_threshold(Int n, Int l) {
  detail::require(n >= 3 && l >= n, "f_exact_value needs n >= 3 and l >= n");
  return checked::add(checked::mul(2, floor_div(l - 2, n - 2)), 2);
}

inline Int f_exact_value(Int n, Int k, Int l) {
  const Int threshold = f_exact_threshold(n, l);
  if (k < threshold)
    throw PreconditionError("f(n,k,l) = k(n-1) only holds for k >= " + std::to_string(threshold));
  return checked::mul(k, n - 1);
}

/// Ingredients of the sumset growth bound: min{ell(A_k), sum n_j - k + 1}.
struct GrowthTerms {
  std::vector<Int> n_j;
  Int last_span = 0;
  Int value = 0;
};

inline GrowthTerms growth_terms(std::span<const IntSet> family) {
  if (family.size() < 2) throw DomainError("growth_bound needs k >= 2 sets");
  const IntSet& last = family.back();
  const Int last_span = ell(last);
  for (std::size_t j = 0; j + 1 < family.size(); ++j)
    if (ell(family[j]) > last_span)
      throw ValidationError(ValidationError::Reason::constraint,
                            "family must be ordered with the largest span last");
  if (!is_primitive(last))
    throw ValidationError(ValidationError::Reason::constraint,
                          "last set " + last.to_string() +
                              " lies in an arithmetic progression with difference > 1");
  GrowthTerms t;
  t.last_span = last_span;
  Int sum = 0;
  for (const IntSet& a : family) {
    const Int nj = static_cast<Int>(a.size()) - (ell(a) == last_span ? 1 : 0);
    t.n_j.push_back(nj);
    sum += nj;
  }
  t.value = std::min(last_span, sum - static_cast<Int>(family.size()) + 1);
  return t;
}

inline Int growth_bound(std::span<const IntSet> family) { return growth_terms(family).value; }

/// Ingredients of the residue-class growth bound: min{h l / d, sum n_j - k + 1}.
struct ClassesTerms {
  Int d = 0;
  Int h = 0;
  std::vector<Int> n_j;
  Int value = 0;
};

inline bool in_difference_set(const IntSet& a, Int x) {
  for (Int y : a.elements())
    if (a.contains(y + x)) return true;
  return false;
}

inline ClassesTerms classes_terms(std::span<const IntSet> family, Int l) {
  if (family.size() < 2) throw DomainError("classes_bound needs k >= 2 sets");
  const IntSet& last = family.back();
  if (last.size() < 2) throw DomainError("classes_bound needs |A_k| >= 2");
  if (l <= 0 || !in_difference_set(last, l))
    throw ValidationError(ValidationError::Reason::constraint,
                          "l = " + std::to_string(l) + " is not a positive element of A_k - A_k");
  ClassesTerms t;
  t.d = ap_difference(last);
  if (l % t.d != 0) throw std::logic_error("d does not divide a difference of A_k");
  const IntSet prefix = family_sum(family.first(family.size() - 1));
  t.h = residue_classes(prefix, t.d);
  Int sum = 0;
  for (const IntSet& a : family) {
    t.n_j.push_back(residue_classes(a, l));
    sum += t.n_j.back();
  }
  t.value = std::min(checked::mul(t.h, l / t.d), sum - static_cast<Int>(family.size()) + 1);
  return t;
}

inline Int classes_bound(std::span<const IntSet> family, Int l) {
  return classes_terms(family, l).value;
}

enum class PropCase { i, ii };

inline const char* to_string(PropCase c) { return c == PropCase::i ? "i" : "ii"; }

/// Whether k meets the case threshold: (i) k >= (l-1)/(n-2) - 1,
/// (ii) k >= (l-1)/(n-2); compared in integers.
inline bool prop_ind_applies(Int n, Int l, Int k, PropCase c) {
  detail::require(n >= 3 && l >= 1 && k >= 1, "prop_ind needs n >= 3, l >= 1, k >= 1");
  const Int summands = c == PropCase::i ? k + 1 : k;
  return checked::mul(summands, n - 2) >= l - 1;
}

/// Lower bound on |S| for S a sum of k dense primitive sets:
/// (i) (ell(S) + (k+1)(n-1) - l + 2) / 2, (ii) (ell(S) + k(n-1) + 2) / 2.
inline Rational prop_ind_bound(Int n, Int l, Int k, Int ell_s, PropCase c) {
  if (!prop_ind_applies(n, l, k, c))
    throw PreconditionError(std::string("k below the threshold of case ") + to_string(c));
  const Int twice = c == PropCase::i
                        ? checked::add(checked::sub(checked::add(ell_s, checked::mul(k + 1, n - 1)), l), 2)
                        : checked::add(checked::add(ell_s, checked::mul(k, n - 1)), 2);
  return Rational(twice, 2);
}

enum class ConjectureVariant { as_printed, kappa };

inline const char* to_string(ConjectureVariant v) {
  return v == ConjectureVariant::as_printed ? "as-printed" : "kappa";
}

/// Conjectured block length in kA for k >= 2 kappa + 1, kappa = kappa_lev.
/// as_printed: (k - kappa) l + k((kappa+1)(n-2) + 2 - l)
/// kappa:      (k - kappa) l + kappa((kappa+1)(n-2) + 2 - l)
inline Int conjecture_block_length(Int n, Int l, Int k, ConjectureVariant v) {
  const Int kappa = kappa_lev(n, l);
  if (k < 2 * kappa + 1)
    throw PreconditionError("conjecture needs k >= 2*kappa + 1 = " + std::to_string(2 * kappa + 1));
  const Int tail = checked::sub(checked::add(checked::mul(kappa + 1, n - 2), 2), l);
  const Int weight = v == ConjectureVariant::as_printed ? k : kappa;
  return checked::add(checked::mul(k - kappa, l), checked::mul(weight, tail));
}

}  // namespace sumset
