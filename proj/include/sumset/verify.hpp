#pragma once

// Checkers: each computes a statement's prediction and the brute-force truth
// for one concrete instance and returns a VerificationRecord.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sumset/enumerate.hpp"
#include "sumset/formulas.hpp"
#include "sumset/int_set.hpp"
#include "sumset/record.hpp"

namespace sumset {

namespace detail {

inline std::string join_ints(const std::vector<Int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

inline ValidationError constraint_error(const std::string& what) {
  return ValidationError(ValidationError::Reason::constraint, what);
}

// Each set lies in [0, l], has at least n elements and is primitive.
inline void check_dense_primitive(std::span<const IntSet> family, Int n, Int l) {
  if (family.empty()) throw constraint_error("empty family");
  for (const IntSet& a : family) {
    if (a.max() > l) throw constraint_error(a.to_string() + " is not inside [0," + std::to_string(l) + "]");
    if (static_cast<Int>(a.size()) < n)
      throw constraint_error(a.to_string() + " has fewer than " + std::to_string(n) + " elements");
    if (!is_primitive(a))
      throw constraint_error(a.to_string() + " lies in an arithmetic progression with difference > 1");
  }
}

inline std::string nl_instance(Int n, Int l, const Family& family) {
  return "n=" + std::to_string(n) + ";l=" + std::to_string(l) + ";A=" + to_string(family);
}

// Fills predicted/observed/verdict for "interval `pred` lies inside `sum`".
inline void judge_interval(VerificationRecord& r, const IntSet& sum, Interval pred) {
  r.predicted = pred;
  const Interval run = run_containing(sum, pred.lo);
  r.observed = run;
  if (!run.empty() && run.hi >= pred.hi) {
    r.verdict = Verdict::holds;
    r.slack = Rational(run.length() - pred.length());
  } else {
    r.verdict = Verdict::violated;
    const Int missing = run.empty() ? pred.lo : run.hi + 1;
    r.witness = "missing " + std::to_string(missing);
  }
}

// Fills predicted/observed/verdict for "observed >= predicted".
inline void judge_at_least(VerificationRecord& r, Int predicted, Int observed, std::string witness) {
  r.predicted = predicted;
  r.observed = observed;
  r.slack = Rational(observed - predicted);
  if (observed >= predicted) {
    r.verdict = Verdict::holds;
  } else {
    r.verdict = Verdict::violated;
    r.witness = std::move(witness);
  }
}

}  // namespace detail

/// Box principle: for S1 in [0,L1], S2 in [0,L2] with
/// max{L1,L2} <= |S1|+|S2|-2, the interval [L1+L2-T, T] (T = |S1|+|S2|-2)
/// lies in S1+S2. Also checks the representation count
/// #{(s1,s2) in [0,L1]x[0,L2] : s1+s2 = g} = min{g,L2} + min{g,L1} - g + 1.
inline VerificationRecord verify_box(const IntSet& s1, const IntSet& s2, Int box1, Int box2) {
  if (box1 < 0 || box2 < 0) throw DomainError("box sizes must be non-negative");
  if (s1.max() > box1 || s2.max() > box2)
    throw detail::constraint_error("box violation: set exceeds its box");
  VerificationRecord r;
  r.statement = Statement::box;
  r.instance = "S1=" + s1.to_string() + ";S2=" + s2.to_string() + ";L1=" + std::to_string(box1) +
               ";L2=" + std::to_string(box2);

  for (Int g = 0; g <= box1 + box2; ++g) {
    Int direct = 0;
    for (Int a = 0; a <= box1; ++a)
      if (g - a >= 0 && g - a <= box2) ++direct;
    const Int formula = std::min(g, box2) + std::min(g, box1) - g + 1;
    if (direct != formula) {
      r.verdict = Verdict::violated;
      r.witness = "representation count at g=" + std::to_string(g) + ": direct " +
                  std::to_string(direct) + ", formula " + std::to_string(formula);
      return r;
    }
  }

  const Int t = static_cast<Int>(s1.size() + s2.size()) - 2;
  if (std::max(box1, box2) > t) {
    VerificationRecord v = vacuous_record(Statement::box, r.instance,
                                          "max{L1,L2} > |S1|+|S2|-2 = " + std::to_string(t));
    return v;
  }
  detail::judge_interval(r, sumset(s1, s2), Interval{box1 + box2 - t, t});
  return r;
}

/// Lower bounds on |A_1 + ... + A_k| for dense primitive summands, cases
/// (i) and (ii), plus the derived strict estimates on |S| versus ell(S).
inline VerificationRecord verify_prop_ind(const Family& family, Int n, Int l, PropCase c) {
  if (n < 3 || l < 1) throw DomainError("verify_prop_ind needs n >= 3 and l >= 1");
  for (const IntSet& a : family) {
    if (static_cast<Int>(a.size()) < n) throw detail::constraint_error(a.to_string() + " is too small");
    if (ell(a) > l) throw detail::constraint_error(a.to_string() + " has span above l");
    if (!is_primitive(a)) throw detail::constraint_error(a.to_string() + " is not primitive");
  }
  const auto k = static_cast<Int>(family.size());
  const Statement id = c == PropCase::i ? Statement::prop_i : Statement::prop_ii;
  const std::string instance = detail::nl_instance(n, l, family) + ";k=" + std::to_string(k);
  if (!prop_ind_applies(n, l, k, c))
    return vacuous_record(id, instance, std::string("k below the threshold of case ") + to_string(c));

  const IntSet s = family_sum(family);
  const Int size = static_cast<Int>(s.size());
  const Rational bound = prop_ind_bound(n, l, k, ell(s), c);
  const bool stronger = c == PropCase::i ? 2 * size > ell(s) : 2 * size > ell(s) + l;

  VerificationRecord r;
  r.statement = id;
  r.instance = instance + ";ellS=" + std::to_string(ell(s));
  r.predicted = bound;
  r.observed = size;
  r.slack = Rational(size) - bound;
  if (Rational(size) >= bound && stronger) {
    r.verdict = Verdict::holds;
  } else {
    r.verdict = Verdict::violated;
    r.witness = "S=" + s.to_string() + (stronger ? "" : " fails the strict estimate");
  }
  return r;
}

/// |A_1+...+A_k| >= |A_1+...+A_{k-1}| + min{ell(A_k), sum n_j - k + 1}.
inline VerificationRecord verify_growth(const Family& family) {
  const GrowthTerms terms = growth_terms(family);
  const IntSet prefix = family_sum(std::span<const IntSet>(family).first(family.size() - 1));
  const IntSet whole = sumset(prefix, family.back());
  VerificationRecord r;
  r.statement = Statement::growth;
  r.instance = "A=" + to_string(family) + ";n_j=" + detail::join_ints(terms.n_j) +
               ";bound=" + std::to_string(terms.value);
  detail::judge_at_least(r, static_cast<Int>(prefix.size()) + terms.value, static_cast<Int>(whole.size()),
                         "sum=" + whole.to_string());
  return r;
}

/// |A_1+...+A_k| >= |A_1+...+A_{k-1}| + min{h l / d, sum n_j - k + 1}.
inline VerificationRecord verify_classes(const Family& family, Int l) {
  const ClassesTerms terms = classes_terms(family, l);
  const IntSet prefix = family_sum(std::span<const IntSet>(family).first(family.size() - 1));
  const IntSet whole = sumset(prefix, family.back());
  VerificationRecord r;
  r.statement = Statement::classes;
  r.instance = "A=" + to_string(family) + ";l=" + std::to_string(l) + ";d=" + std::to_string(terms.d) +
               ";h=" + std::to_string(terms.h) + ";n_j=" + detail::join_ints(terms.n_j) +
               ";bound=" + std::to_string(terms.value);
  detail::judge_at_least(r, static_cast<Int>(prefix.size()) + terms.value, static_cast<Int>(whole.size()),
                         "sum=" + whole.to_string());
  return r;
}

/// [a, kl - a] inside kA for 0, l in A, A primitive, |A| = n >= 3, k >= 2 kappa.
inline VerificationRecord verify_lev(const IntSet& a, Int k) {
  if (a.min() != 0) throw detail::constraint_error("normalization violated: min A must be 0");
  if (a.size() < 3) throw detail::constraint_error("need |A| >= 3");
  if (!is_primitive(a)) throw detail::constraint_error("normalization violated: gcd(A) must be 1");
  const Int l = a.max();
  const auto n = static_cast<Int>(a.size());
  const Int kappa = kappa_lev(n, l);
  const std::string instance = "A=" + a.to_string() + ";n=" + std::to_string(n) + ";l=" + std::to_string(l) +
                               ";k=" + std::to_string(k) + ";kappa=" + std::to_string(kappa);
  if (k < 2 * kappa) return vacuous_record(Statement::lev, instance, "k < 2*kappa");
  VerificationRecord r;
  r.statement = Statement::lev;
  r.instance = instance;
  detail::judge_interval(r, k_fold(a, k), lev_interval(n, l, k));
  return r;
}

/// A_1 + ... + A_{2 kappa + 1} contains a block of length 2(kappa+1)(n-1) - l.
inline VerificationRecord verify_main(const Family& family, Int n, Int l) {
  const Int kappa = kappa_main(n, l);
  if (static_cast<Int>(family.size()) != 2 * kappa + 1)
    throw detail::constraint_error("family size must be 2*kappa+1 = " + std::to_string(2 * kappa + 1));
  detail::check_dense_primitive(family, n, l);
  const IntSet s = family_sum(family);
  const Block b = longest_block(s);
  VerificationRecord r;
  r.statement = Statement::main;
  r.instance = detail::nl_instance(n, l, family);
  detail::judge_at_least(r, main_block_length(n, l), b.length, b.to_string() + " in " + s.to_string());
  return r;
}

/// For k >= 2 ceil((l-1)/(n-2)) summands the sum has a block of length
/// k(n-1). Also replays the incremental argument: a long block from the
/// first 2 kappa' + 1 summands, growth by n-1 per further summand, and
/// growth by l' for the widest summand added last.
inline VerificationRecord verify_corollary(const Family& family, Int n, Int l) {
  detail::check_dense_primitive(family, n, l);
  const auto k = static_cast<Int>(family.size());
  const std::string instance = detail::nl_instance(n, l, family) + ";k=" + std::to_string(k);
  if (k < corollary_threshold(n, l))
    return vacuous_record(Statement::corollary, instance, "k < 2*ceil((l-1)/(n-2))");

  // Widest set last, everything translated to start at 0.
  std::size_t widest = 0;
  for (std::size_t i = 1; i < family.size(); ++i)
    if (ell(family[i]) > ell(family[widest])) widest = i;
  Family order;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (i != widest) order.push_back(family[i].shifted_down(family[i].min()));
  order.push_back(family[widest].shifted_down(family[widest].min()));
  const Int reduced_l = ell(order.back());
  const Int kappa = kappa_main(n, reduced_l);
  const auto head = static_cast<std::size_t>(2 * kappa + 1);

  std::optional<std::string> step_failure;
  IntSet acc = family_sum(std::span<const IntSet>(order).first(head));
  Int block = longest_block(acc).length;
  if (block < main_block_length(n, reduced_l))
    step_failure = "initial block " + std::to_string(block) + " < " +
                   std::to_string(main_block_length(n, reduced_l));
  for (std::size_t j = head; j < order.size() && !step_failure; ++j) {
    acc = sumset(acc, order[j]);
    const Int next = longest_block(acc).length;
    const bool last = j + 1 == order.size();
    const Int need = last ? reduced_l : n - 1;
    if (next - block < need)
      step_failure = "summand " + std::to_string(j + 1) + " grew the block by " +
                     std::to_string(next - block) + " < " + std::to_string(need);
    block = next;
  }

  VerificationRecord r;
  r.statement = Statement::corollary;
  r.instance = instance + ";reduced_l=" + std::to_string(reduced_l);
  const Block final_block = longest_block(family_sum(family));
  detail::judge_at_least(r, corollary_block_length(n, k), final_block.length, final_block.to_string());
  if (step_failure) {
    r.verdict = Verdict::violated;
    r.witness = *step_failure;
  }
  return r;
}

struct ConstructiveResult {
  Block predicted;
  VerificationRecord record;
};

/// Splits the summands (sorted by descending span) into alternating halves
/// S1 = A_1 + A_3 + ... + A_{2kappa-1} and S2 = A_2 + ... + A_{2kappa} + A_{2kappa+1},
/// predicts a block of S1 + S2 from the box principle and checks it.
inline ConstructiveResult constructive_block(const Family& family, Int n, Int l) {
  const Int kappa = kappa_main(n, l);
  if (static_cast<Int>(family.size()) != 2 * kappa + 1)
    throw detail::constraint_error("family size must be 2*kappa+1 = " + std::to_string(2 * kappa + 1));
  detail::check_dense_primitive(family, n, l);

  Family sorted = family;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const IntSet& x, const IntSet& y) { return ell(x) > ell(y); });
  Family odd;
  Family even;
  for (std::size_t j = 0; j < 2 * static_cast<std::size_t>(kappa); ++j) (j % 2 == 0 ? odd : even).push_back(sorted[j]);
  even.push_back(sorted.back());
  // With kappa = 0 the odd group is the empty sum {0}.
  const IntSet s1 = odd.empty() ? make_set({0}) : family_sum(odd);
  const IntSet s2 = family_sum(even);

  const Int box1 = ell(s1);
  const Int box2 = ell(s2);
  const Int t = static_cast<Int>(s1.size() + s2.size()) - 2;
  const Int offset = s1.min() + s2.min();

  ConstructiveResult out{};
  VerificationRecord& r = out.record;
  r.statement = Statement::constructive;
  r.instance = detail::nl_instance(n, l, family) + ";S1=" + s1.to_string() + ";S2=" + s2.to_string();
  if (std::max(box1, box2) > t) {
    r.verdict = Verdict::violated;
    r.witness = "box principle hypothesis fails: max{" + std::to_string(box1) + "," + std::to_string(box2) +
                "} > " + std::to_string(t);
    return out;
  }
  const Interval pred{box1 + box2 - t + offset, t + offset};
  out.predicted = Block{pred.lo, pred.length()};
  detail::judge_interval(r, sumset(s1, s2), pred);
  const Int need = main_block_length(n, l);
  if (r.verdict == Verdict::holds && pred.length() < need) {
    r.verdict = Verdict::violated;
    r.witness = "predicted interval length " + std::to_string(pred.length()) + " < " + std::to_string(need);
  }
  return out;
}

struct SharpWitness {
  Family family;
  std::vector<Interval> segments;
  std::optional<IntSet> sum;
  std::optional<Block> longest;
  VerificationRecord record;
};

/// 2 kappa copies of [0,m] u [l-m,l] (n = 2m+2): the sum splits into the
/// segments [j(l-m), j(l-m) + 2 kappa m], j = 0..2 kappa, which do not abut
/// when the fractional part of (l-1)/(n-2) exceeds 1/2.
inline SharpWitness sharp_witness(Int m, Int l) {
  if (m < 1 || 2 * m >= l) throw DomainError("sharp_witness needs 1 <= m < l/2");
  const Int n = 2 * m + 2;
  const Int kappa = kappa_main(n, l);
  const std::string instance = "m=" + std::to_string(m) + ";l=" + std::to_string(l) + ";n=" +
                               std::to_string(n) + ";kappa=" + std::to_string(kappa);
  SharpWitness w{};
  std::vector<Int> v;
  for (Int x = 0; x <= m; ++x) v.push_back(x);
  for (Int x = l - m; x <= l; ++x) v.push_back(x);
  const IntSet a = make_set(v);
  w.family.assign(static_cast<std::size_t>(2 * kappa), a);
  for (Int j = 0; j <= 2 * kappa; ++j) w.segments.push_back({j * (l - m), j * (l - m) + 2 * kappa * m});

  // {(l-1)/(n-2)} > 1/2 in integers.
  if (2 * ((l - 1) % (n - 2)) <= n - 2) {
    w.record = vacuous_record(Statement::sharp, instance, "fractional part of (l-1)/(n-2) is not above 1/2");
    return w;
  }
  const IntSet s = k_fold(a, 2 * kappa);
  std::vector<Int> expected;
  for (const Interval& seg : w.segments)
    for (Int x = seg.lo; x <= seg.hi; ++x) expected.push_back(x);
  const Block b = longest_block(s);
  w.sum = s;
  w.longest = b;

  VerificationRecord& r = w.record;
  r.statement = Statement::sharp;
  r.instance = instance;
  r.predicted = kappa * (n - 2);
  r.observed = b.length;
  r.slack = Rational(l - 1 - b.length);
  if (s != make_set(expected)) {
    r.verdict = Verdict::violated;
    r.witness = "sum " + s.to_string() + " differs from the segment union";
  } else if (b.length != kappa * (n - 2) || b.length >= l) {
    r.verdict = Verdict::violated;
    r.witness = b.to_string();
  } else {
    r.verdict = Verdict::holds;
  }
  return w;
}

struct FValue {
  Int value;
  IntSet argmin;
};

/// min over n-subsets A of [1,l] of the longest AP length in kA.
inline FValue compute_f(Int n, Int k, Int l, std::uint64_t cap = config::default_enum_cap) {
  if (n < 2 || n > l || k < 1) throw DomainError("compute_f needs 2 <= n <= l and k >= 1");
  if (binomial(static_cast<std::uint64_t>(l), static_cast<std::uint64_t>(n)) > cap)
    throw CapExceeded("C(" + std::to_string(l) + "," + std::to_string(n) + ") exceeds cap " +
                      std::to_string(cap));
  detail::check_universe(static_cast<std::uint64_t>(checked::mul(k, l)) + 1);
  std::optional<FValue> best;
  for_each_combination(1, l, n, [&](std::span<const Int> c) {
    const IntSet a = make_set(c);
    const Int len = longest_ap(k_fold(a, k)).length;
    if (!best || len < best->value) best = FValue{len, a};
    return true;
  });
  return *best;
}

/// Brute-force f(n,k,l) compared with k(n-1) where that value is known.
inline VerificationRecord verify_f_value(Int n, Int k, Int l, std::uint64_t cap = config::default_enum_cap) {
  const FValue f = compute_f(n, k, l, cap);
  const std::string instance = "n=" + std::to_string(n) + ";k=" + std::to_string(k) + ";l=" +
                               std::to_string(l) + ";argmin=" + f.argmin.to_string();
  if (n < 3 || k < f_exact_threshold(n, l)) {
    VerificationRecord v = vacuous_record(Statement::f_value, instance, "k below 2*floor((l-2)/(n-2))+2");
    v.observed = f.value;
    return v;
  }
  VerificationRecord r;
  r.statement = Statement::f_value;
  r.instance = instance;
  r.predicted = f_exact_value(n, k, l);
  r.observed = f.value;
  r.slack = Rational(f.value - f_exact_value(n, k, l));
  if (f.value == f_exact_value(n, k, l)) {
    r.verdict = Verdict::holds;
  } else {
    r.verdict = Verdict::violated;
    r.witness = "argmin " + f.argmin.to_string();
  }
  return r;
}

struct SarkozyCover {
  Int d;
  Int k;
  /// The run is m d, (m+1) d, ..., (m+l-1) d.
  Int m;
};

struct SarkozyResult {
  std::optional<SarkozyCover> cover;
  VerificationRecord record;
};

/// First m such that x d for x in [m, m+terms) all lie in s.
inline std::optional<Int> find_multiples_run(const IntSet& s, Int d, Int terms) {
  Int run = 0;
  for (Int x = ceil_div(s.min(), d); x * d <= s.max(); ++x) {
    run = s.contains(x * d) ? run + 1 : 0;
    if (run == terms) return x - terms + 1;
  }
  return std::nullopt;
}

/// Smallest (k, then d) with kA containing l consecutive multiples of d,
/// searched over k < 118 kappa and d <= max(kappa - 1, 1).
inline SarkozyResult find_sarkozy_cover(const IntSet& a, Int l) {
  const auto n = static_cast<Int>(a.size());
  if (a.min() < 1 || a.max() > l) throw detail::constraint_error("A must lie in [1,l]");
  const Int kappa = kappa_sarkozy(n, l);
  const Int d_max = std::max<Int>(kappa - 1, 1);
  const Int k_bound = 118 * kappa;
  const std::string instance = "A=" + a.to_string() + ";n=" + std::to_string(n) + ";l=" + std::to_string(l) +
                               ";kappa=" + std::to_string(kappa);
  SarkozyResult out{};
  VerificationRecord& r = out.record;
  r.statement = Statement::sarkozy;
  r.instance = instance;
  r.predicted = k_bound - 1;
  IntSet s = a;
  for (Int k = 1; k < k_bound; ++k) {
    if (k > 1) s = sumset(s, a);
    for (Int d = 1; d <= d_max; ++d) {
      if (const auto m = find_multiples_run(s, d, l)) {
        out.cover = SarkozyCover{d, k, *m};
        r.observed = k;
        r.slack = Rational(k_bound - 1 - k);
        r.verdict = Verdict::holds;
        r.note = "run of l terms; d=" + std::to_string(d) + ";m=" + std::to_string(*m) +
                 ";k<2kappa+2:" + (k < 2 * kappa + 2 ? "yes" : "no");
        return out;
      }
    }
  }
  r.verdict = Verdict::violated;
  r.witness = "no cover with k < " + std::to_string(k_bound);
  return out;
}

/// Records for one (A, k) of the conjectured block length, both variants
/// (as-printed first). A must satisfy 0, l in A, gcd 1, |A| >= 3.
inline std::array<VerificationRecord, 2> conjecture_records(const IntSet& a, Int k) {
  if (a.min() != 0 || a.size() < 3 || !is_primitive(a))
    throw detail::constraint_error("conjecture needs 0 in A, gcd(A) = 1 and |A| >= 3");
  const Int l = a.max();
  const auto n = static_cast<Int>(a.size());
  const Int kappa = kappa_lev(n, l);
  const std::string instance = "A=" + a.to_string() + ";n=" + std::to_string(n) + ";l=" + std::to_string(l) +
                               ";k=" + std::to_string(k) + ";kappa=" + std::to_string(kappa);
  const std::array<std::pair<Statement, ConjectureVariant>, 2> variants{{
      {Statement::conjecture_as_printed, ConjectureVariant::as_printed},
      {Statement::conjecture_kappa, ConjectureVariant::kappa},
  }};
  std::array<VerificationRecord, 2> out;
  if (k < 2 * kappa + 1) {
    for (std::size_t i = 0; i < 2; ++i) out[i] = vacuous_record(variants[i].first, instance, "k < 2*kappa+1");
    return out;
  }
  const Block b = longest_block(k_fold(a, k));
  const char* range = k < 3 * kappa ? "open range" : "k >= 3*kappa";
  for (std::size_t i = 0; i < 2; ++i) {
    VerificationRecord& r = out[i];
    r.statement = variants[i].first;
    r.instance = instance;
    r.note = range;
    detail::judge_at_least(r, conjecture_block_length(n, l, k, variants[i].second), b.length, b.to_string());
  }
  return out;
}

inline FamilySpec conjecture_space(Int n, Int l) {
  FamilySpec spec;
  spec.k = 1;
  spec.n_min = n;
  spec.l = l;
  spec.require_endpoints = true;
  spec.require_primitive = true;
  return spec;
}

/// Every admissible A and every k in [k_min, k_max], both variants.
inline std::vector<VerificationRecord> scan_conjecture(Int n, Int l, Int k_min, Int k_max,
                                                       std::uint64_t cap = config::default_enum_cap) {
  if (n < 3 || l < n - 1) throw DomainError("scan_conjecture needs n >= 3 and l >= n - 1");
  std::vector<VerificationRecord> out;
  for (const IntSet& a : enum_sets(conjecture_space(n, l), cap))
    for (Int k = k_min; k <= k_max; ++k)
      for (auto& r : conjecture_records(a, k)) out.push_back(std::move(r));
  return out;
}

}  // namespace sumset
