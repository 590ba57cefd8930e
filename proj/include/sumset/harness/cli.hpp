#pragma once

// Command-line front end. Exit codes: 0 verified / no findings,
// 1 mathematical finding (a violated record), 2 operational error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sumset/enumerate.hpp"
#include "sumset/formulas.hpp"
#include "sumset/harness/driver.hpp"
#include "sumset/harness/report.hpp"
#include "sumset/harness/summary.hpp"
#include "sumset/instances.hpp"
#include "sumset/verify.hpp"

namespace sumset::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_finding = 1;
inline constexpr int exit_error = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string statement;
  std::optional<Int> n;
  std::optional<Int> l;
  std::optional<Int> k;
  std::optional<Int> k_min;
  std::optional<Int> k_max;
  std::optional<Int> m;
  std::optional<Int> n_max;
  std::optional<Int> max_span;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> random;
  std::optional<unsigned> jobs;
  std::uint64_t cap = config::default_enum_cap;
  std::uint64_t checkpoint_every = 10'000;
  std::optional<std::uint64_t> halt_after;
  std::string out;
  std::string set;
  std::string variant = "kappa";
  bool resume = false;
  bool endpoints = false;
  bool identical = false;
};

namespace detail {

inline Int need(const std::optional<Int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

inline std::uint64_t resolve_seed(const Options& o, std::ostream& err) {
  if (o.seed) return *o.seed;
  std::random_device rd;
  const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  err << "seed: " << seed << " (pass --seed " << seed << " to reproduce)\n";
  return seed;
}

inline harness::json family_space_params(const FamilySpec& spec) {
  return {{"k", spec.k},
          {"n", spec.n_min},
          {"n_max", spec.n_max},
          {"l", spec.l},
          {"endpoints", spec.require_endpoints},
          {"primitive", spec.require_primitive},
          {"identical", spec.identical},
          {"canonical", spec.canonical}};
}

// Families of `spec`, either the whole canonical space or `random` draws.
template <typename Check>
harness::ScanJob family_job(const Options& o, FamilySpec spec, std::ostream& err, Check check) {
  harness::ScanJob job;
  job.params = family_space_params(spec);
  if (o.random) {
    const std::uint64_t seed = resolve_seed(o, err);
    job.seed = seed;
    job.units = *o.random;
    job.params["random"] = *o.random;
    job.evaluate = [spec, seed, check](std::uint64_t u) {
      return std::vector<VerificationRecord>{check(random_family(spec, mix_seed(seed, u)))};
    };
  } else {
    auto space = std::make_shared<const FamilySpace>(spec, o.cap);
    job.units = space->count();
    job.evaluate = [space, check](std::uint64_t u) {
      return std::vector<VerificationRecord>{check(space->at(u))};
    };
  }
  return job;
}

inline FamilySpec dense_primitive_spec(const Options& o, Int k, Int n, Int l) {
  FamilySpec spec;
  spec.k = k;
  spec.n_min = n;
  spec.n_max = o.n_max.value_or(0);
  spec.l = l;
  spec.require_endpoints = o.endpoints;
  spec.require_primitive = true;
  spec.identical = o.identical;
  spec.canonical = true;
  return spec;
}

inline std::pair<Int, Int> k_range(const Options& o, Int default_min, Int default_max) {
  if (o.k) return {*o.k, *o.k};
  const Int lo = o.k_min.value_or(default_min);
  const Int hi = o.k_max.value_or(std::max(default_max, lo));
  if (hi < lo) throw UsageError("--k-max must not be below --k-min");
  return {lo, hi};
}

inline harness::ScanJob verify_job(const Options& o, std::ostream& err) {
  const auto statement = parse_statement(o.statement);
  if (!statement) throw UsageError("unknown statement '" + o.statement + "'");
  harness::ScanJob job;
  switch (*statement) {
    case Statement::lev: {
      const Int n = need(o.n, "--n");
      const Int l = need(o.l, "--l");
      const Int kappa = kappa_lev(n, l);
      const auto [k_lo, k_hi] = k_range(o, 2 * kappa, 2 * kappa + 3);
      auto sets = std::make_shared<const std::vector<IntSet>>(enum_sets(conjecture_space(n, l), o.cap));
      const auto ks = static_cast<std::uint64_t>(k_hi - k_lo + 1);
      job.params = {{"n", n}, {"l", l}, {"k_min", k_lo}, {"k_max", k_hi}};
      job.units = sets->size() * ks;
      job.evaluate = [sets, ks, k_lo](std::uint64_t u) {
        return std::vector<VerificationRecord>{
            verify_lev((*sets)[static_cast<std::size_t>(u / ks)], k_lo + static_cast<Int>(u % ks))};
      };
      break;
    }
    case Statement::main:
    case Statement::constructive: {
      const Int n = need(o.n, "--n");
      const Int l = need(o.l, "--l");
      const FamilySpec spec = dense_primitive_spec(o, 2 * kappa_main(n, l) + 1, n, l);
      if (*statement == Statement::main) {
        job = family_job(o, spec, err, [n, l](const Family& f) { return verify_main(f, n, l); });
      } else {
        job = family_job(o, spec, err, [n, l](const Family& f) { return constructive_block(f, n, l).record; });
      }
      break;
    }
    case Statement::corollary: {
      const Int n = need(o.n, "--n");
      const Int l = need(o.l, "--l");
      const Int k = o.k.value_or(corollary_threshold(n, l));
      job = family_job(o, dense_primitive_spec(o, k, n, l), err,
                       [n, l](const Family& f) { return verify_corollary(f, n, l); });
      break;
    }
    case Statement::prop_i:
    case Statement::prop_ii: {
      const PropCase c = *statement == Statement::prop_i ? PropCase::i : PropCase::ii;
      if (o.random) {
        const std::uint64_t seed = resolve_seed(o, err);
        const Int max_span = o.max_span.value_or(32);
        const Int max_k = o.k.value_or(6);
        job.seed = seed;
        job.units = *o.random;
        job.params = {{"random", *o.random}, {"max_span", max_span}, {"max_k", max_k}};
        job.evaluate = [seed, max_span, max_k, c](std::uint64_t u) {
          const auto inst = instances::random_prop_instance(mix_seed(seed, u), max_span, max_k);
          return std::vector<VerificationRecord>{verify_prop_ind(inst.family, inst.n, inst.l, c)};
        };
      } else {
        const Int n = need(o.n, "--n");
        const Int l = need(o.l, "--l");
        const Int k = need(o.k, "--k");
        job = family_job(o, dense_primitive_spec(o, k, n, l), err,
                         [n, l, c](const Family& f) { return verify_prop_ind(f, n, l, c); });
      }
      break;
    }
    case Statement::growth:
    case Statement::classes:
    case Statement::box: {
      if (!o.random) throw UsageError("statement '" + o.statement + "' runs in --random mode only");
      const std::uint64_t seed = resolve_seed(o, err);
      const Int max_span = o.max_span.value_or(*statement == Statement::box ? 64 : 32);
      const Int max_k = o.k.value_or(5);
      job.seed = seed;
      job.units = *o.random;
      job.params = {{"random", *o.random}, {"max_span", max_span}};
      if (*statement == Statement::box) {
        job.evaluate = [seed, max_span](std::uint64_t u) {
          const auto b = instances::random_box_instance(mix_seed(seed, u), max_span);
          return std::vector<VerificationRecord>{verify_box(b.s1, b.s2, b.box1, b.box2)};
        };
      } else if (*statement == Statement::growth) {
        job.params["max_k"] = max_k;
        job.evaluate = [seed, max_span, max_k](std::uint64_t u) {
          return std::vector<VerificationRecord>{
              verify_growth(instances::random_growth_instance(mix_seed(seed, u), max_span, max_k))};
        };
      } else {
        job.params["max_k"] = max_k;
        job.evaluate = [seed, max_span, max_k](std::uint64_t u) {
          const auto inst = instances::random_classes_instance(mix_seed(seed, u), max_span, max_k);
          return std::vector<VerificationRecord>{verify_classes(inst.family, inst.l)};
        };
      }
      break;
    }
    case Statement::sarkozy: {
      const Int l = need(o.l, "--l");
      auto sets = std::make_shared<std::vector<IntSet>>();
      const Int n_lo = o.n.value_or(2);
      const Int n_hi = o.n.value_or(l);
      for (Int n = n_lo; n <= n_hi; ++n) {
        if (binomial(static_cast<std::uint64_t>(l), static_cast<std::uint64_t>(n)) > o.cap)
          throw CapExceeded("sarkozy enumeration exceeds cap");
        for_each_combination(1, l, n, [&](std::span<const Int> c) {
          sets->push_back(make_set(c));
          return true;
        });
      }
      job.params = {{"l", l}, {"n_min", n_lo}, {"n_max", n_hi}};
      job.units = sets->size();
      job.evaluate = [sets, l](std::uint64_t u) {
        return std::vector<VerificationRecord>{find_sarkozy_cover((*sets)[static_cast<std::size_t>(u)], l).record};
      };
      break;
    }
    case Statement::f_value: {
      const Int n = need(o.n, "--n");
      const Int k = need(o.k, "--k");
      const Int l = need(o.l, "--l");
      const std::uint64_t cap = o.cap;
      job.params = {{"n", n}, {"k", k}, {"l", l}};
      job.units = 1;
      job.evaluate = [n, k, l, cap](std::uint64_t) {
        return std::vector<VerificationRecord>{verify_f_value(n, k, l, cap)};
      };
      break;
    }
    case Statement::sharp: {
      const Int m = need(o.m, "--m");
      const Int l = need(o.l, "--l");
      job.params = {{"m", m}, {"l", l}};
      job.units = 1;
      job.evaluate = [m, l](std::uint64_t) { return std::vector<VerificationRecord>{sharp_witness(m, l).record}; };
      break;
    }
    case Statement::conjecture_as_printed:
    case Statement::conjecture_kappa:
      throw UsageError("use the scan-conjecture subcommand for conjecture records");
  }
  job.command = "verify";
  job.params["statement"] = o.statement;
  return job;
}

inline harness::DriverOptions driver_options(const Options& o, std::ostream& err) {
  harness::DriverOptions d;
  d.out = o.out;
  d.resume = o.resume;
  d.jobs = o.jobs.value_or(harness::default_jobs());
  d.checkpoint_every = o.checkpoint_every;
  d.halt_after_batches = o.halt_after;
  d.progress = o.out.empty() ? nullptr : &err;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) d.epoch = std::stoll(epoch);
  return d;
}

inline void print_counts(const report::RunManifest& m, std::ostream& text) {
  for (const auto& [name, c] : m.by_statement)
    text << name << ": " << c.total() << " records, " << c.holds << " holds, " << c.violated << " violated, "
         << c.vacuous << " vacuous\n";
}

inline int run_job(const harness::ScanJob& job, const Options& o, std::ostream& out, std::ostream& err,
                   std::optional<std::string> deciding = std::nullopt) {
  const harness::DriverOptions d = driver_options(o, err);
  std::ostream& text = o.out.empty() ? err : out;
  const harness::RunOutcome run = harness::run_scan(job, d, &out);
  if (!run.completed) {
    text << "halted after " << run.manifest.counts.total() << " records; rerun with --resume to continue\n";
    return exit_error;
  }
  print_counts(run.manifest, text);
  if (deciding) {
    const auto it = run.manifest.by_statement.find(*deciding);
    return it != run.manifest.by_statement.end() && it->second.violated > 0 ? exit_finding : exit_ok;
  }
  return run.manifest.counts.violated > 0 ? exit_finding : exit_ok;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  return run_job(verify_job(o, err), o, out, err);
}

inline int cmd_compute_f(const Options& o, std::ostream& out) {
  const Int n = need(o.n, "--n");
  const Int k = need(o.k, "--k");
  const Int l = need(o.l, "--l");
  const FValue f = compute_f(n, k, l, o.cap);
  out << "f(" << n << "," << k << "," << l << ") = " << f.value << "\n";
  out << "argmin: " << f.argmin.to_string() << "\n";
  if (n < 3) {
    out << "threshold: k(n-1) formula needs n >= 3\n";
  } else {
    const Int t = f_exact_threshold(n, l);
    if (k >= t) {
      const Int exact = f_exact_value(n, k, l);
      out << "threshold: k >= " << t << " applies; k(n-1) = " << exact << ": "
          << (exact == f.value ? "matches k(n-1)" : "DIFFERS from k(n-1)") << "\n";
      if (exact != f.value) return exit_finding;
    } else {
      out << "threshold: k >= " << t << " does not apply\n";
    }
  }
  return exit_ok;
}

inline int cmd_scan_conjecture(const Options& o, std::ostream& out, std::ostream& err) {
  const Int n = need(o.n, "--n");
  const Int l = need(o.l, "--l");
  if (o.variant != "kappa" && o.variant != "as-printed") throw UsageError("--variant must be kappa or as-printed");
  const Int kappa = kappa_lev(n, l);
  const auto [k_lo, k_hi] = k_range(o, 2 * kappa + 1, 3 * kappa - 1);
  std::ostream& text = o.out.empty() ? err : out;
  if (o.variant == "kappa")
    text << "note: deciding by the kappa-weighted block length; the as-printed formula "
            "(k-kappa)l + k((kappa+1)(n-2)+2-l) exceeds kl on full intervals and is recorded alongside\n";
  auto sets = std::make_shared<const std::vector<IntSet>>(enum_sets(conjecture_space(n, l), o.cap));
  const auto ks = static_cast<std::uint64_t>(k_hi - k_lo + 1);
  harness::ScanJob job;
  job.command = "scan-conjecture";
  job.params = {{"n", n}, {"l", l}, {"k_min", k_lo}, {"k_max", k_hi}};
  job.units = sets->size() * ks;
  job.evaluate = [sets, ks, k_lo](std::uint64_t u) {
    auto pair = conjecture_records((*sets)[static_cast<std::size_t>(u / ks)], k_lo + static_cast<Int>(u % ks));
    return std::vector<VerificationRecord>(pair.begin(), pair.end());
  };
  const std::string deciding =
      o.variant == "kappa" ? "conjecture_kappa" : "conjecture_as_printed";
  return run_job(job, o, out, err, deciding);
}

inline int cmd_witness(const Options& o, std::ostream& out) {
  const Int m = need(o.m, "--m");
  const Int l = need(o.l, "--l");
  const SharpWitness w = sharp_witness(m, l);
  const Int n = 2 * m + 2;
  out << "n = " << n << ", kappa = " << kappa_main(n, l) << "\n";
  if (w.record.verdict == Verdict::vacuous) {
    out << "condition fails: fractional part of (l-1)/(n-2) = " << (l - 1) % (n - 2) << "/" << (n - 2)
        << " is not above 1/2\n";
    return exit_error;
  }
  out << "family: " << w.family.size() << " copies of " << w.family.front().to_string() << "\n";
  out << "segments:";
  for (const Interval& s : w.segments) out << ' ' << s.to_string();
  out << "\nlongest block: " << w.longest->to_string() << "\n";
  out << "verdict: " << to_string(w.record.verdict);
  if (w.record.witness) out << " (" << *w.record.witness << ")";
  out << "\n";
  return w.record.verdict == Verdict::holds ? exit_ok : exit_finding;
}

inline int cmd_sarkozy(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.set.empty()) {
    Options v = o;
    v.statement = "sarkozy";
    harness::ScanJob job = verify_job(v, err);
    job.command = "sarkozy-cover";
    return run_job(job, o, out, err);
  }
  const Int l = need(o.l, "--l");
  std::vector<Int> values;
  std::stringstream ss(o.set);
  std::string tok;
  while (std::getline(ss, tok, ',')) values.push_back(std::stoll(tok));
  const SarkozyResult r = find_sarkozy_cover(make_set(values), l);
  out << r.record.instance << "\n";
  if (!r.cover) {
    out << "no cover found: " << *r.record.witness << "\n";
    return exit_finding;
  }
  out << "d = " << r.cover->d << ", k = " << r.cover->k << ", multiples " << r.cover->m << "d.."
      << (r.cover->m + l - 1) << "d\n";
  if (r.record.note) out << *r.record.note << "\n";
  return exit_ok;
}

inline int cmd_summarize(const std::string& path, const std::string& csv, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  const report::ReportFile file = report::read_report(in);
  print_summary(harness::summarize(file.records), out);
  if (!csv.empty()) {
    std::ofstream c(csv);
    if (!c) throw Error("cannot write " + csv);
    harness::write_csv(file.records, c);
  }
  return exit_ok;
}

inline int cmd_selftest(std::ostream& out) {
  struct Check {
    const char* name;
    bool (*run)();
  };
  const Check checks[] = {
      {"sumset {0,2}+{0,3}", [] { return sumset(make_set({0, 2}), make_set({0, 3})) == make_set({0, 2, 3, 5}); }},
      {"4.{0,1,3} = [0,10] u {12}",
       [] { return k_fold(make_set({0, 1, 3}), 4) == make_set({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12}); }},
      {"lev_interval(3,3,4) = [2,10]", [] { return lev_interval(3, 3, 4) == Interval{2, 10}; }},
      {"main_block_length(6,12) = 18", [] { return main_block_length(6, 12) == 18; }},
      {"3.{0,1,3} block >= 5",
       [] { return verify_main(Family(3, make_set({0, 1, 3})), 3, 3).verdict == Verdict::holds; }},
      {"conjecture (3,3,5): kappa 13, printed 19",
       [] {
         return conjecture_block_length(3, 3, 5, ConjectureVariant::kappa) == 13 &&
                conjecture_block_length(3, 3, 5, ConjectureVariant::as_printed) == 19 &&
                longest_block(k_fold(make_set({0, 1, 3}), 5)).length == 13;
       }},
      {"witness m=2 l=12", [] { return sharp_witness(2, 12).record.verdict == Verdict::holds; }},
      {"f(3,8,5) = 16", [] { return compute_f(3, 8, 5).value == 16; }},
      {"box {0,1,3}+{0,1,3}",
       [] { return verify_box(make_set({0, 1, 3}), make_set({0, 1, 3}), 3, 3).verdict == Verdict::holds; }},
      {"enum n=3 l=3 endpoints primitive", [] { return enum_sets(conjecture_space(3, 3)).size() == 2; }},
  };
  bool ok = true;
  for (const Check& c : checks) {
    bool pass = false;
    try {
      pass = c.run();
    } catch (const std::exception&) {
      pass = false;
    }
    out << (pass ? "ok    " : "FAIL  ") << c.name << "\n";
    ok = ok && pass;
  }
  return ok ? exit_ok : exit_finding;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sumset block verification: exhaustive and randomized checks of bounds on long blocks "
               "of consecutive integers in sumsets"};
  app.require_subcommand(1);
  Options o;
  std::string summarize_path;
  std::string csv_path;

  auto add_params = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "set size lower bound");
    sub->add_option("--l", o.l, "span bound");
    sub->add_option("--k", o.k, "number of summands");
    sub->add_option("--k-min", o.k_min, "smallest k");
    sub->add_option("--k-max", o.k_max, "largest k");
    sub->add_option("--cap", o.cap, "enumeration cap");
  };
  auto add_run = [&o](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "seed for randomized modes");
    sub->add_option("--jobs", o.jobs, "worker threads (default: SUMSET_JOBS or all cores)");
    sub->add_option("--out", o.out, "JSONL report path (default: stdout)");
    sub->add_flag("--resume", o.resume, "resume from <out>.ckpt");
    sub->add_option("--checkpoint-every", o.checkpoint_every, "work units per checkpoint");
    sub->add_option("--halt-after", o.halt_after, "stop after this many checkpoints")->group("");
  };

  CLI::App* verify = app.add_subcommand("verify", "check one statement over a family space");
  verify->add_option("--statement", o.statement, "statement id")->required();
  add_params(verify);
  add_run(verify);
  verify->add_option("--m", o.m, "segment parameter for the sharpness witness");
  verify->add_option("--random", o.random, "number of random instances");
  verify->add_option("--n-max", o.n_max, "largest set size (default: exactly n)");
  verify->add_option("--max-span", o.max_span, "span bound for random instances");
  verify->add_flag("--endpoints", o.endpoints, "require 0 and l in every set");
  verify->add_flag("--identical", o.identical, "identical summands only");

  CLI::App* compute_f = app.add_subcommand("compute-f", "exhaustive f(n,k,l)");
  add_params(compute_f);

  CLI::App* scan = app.add_subcommand("scan-conjecture", "scan the conjectured block length");
  add_params(scan);
  add_run(scan);
  scan->add_option("--variant", o.variant, "variant deciding the exit code: kappa or as-printed");

  CLI::App* witness = app.add_subcommand("witness", "sharpness construction [0,m] u [l-m,l]");
  witness->add_option("--m", o.m)->required();
  witness->add_option("--l", o.l)->required();

  CLI::App* sarkozy = app.add_subcommand("sarkozy-cover", "minimal (k,d) covers of l multiples of d");
  add_params(sarkozy);
  add_run(sarkozy);
  sarkozy->add_option("--set", o.set, "comma-separated set inside [1,l]");

  CLI::App* summarize = app.add_subcommand("summarize", "summarize a JSONL report");
  summarize->add_option("path", summarize_path, "report file")->required();
  summarize->add_option("--csv", csv_path, "write per-record CSV here");

  CLI::App* selftest = app.add_subcommand("selftest", "run built-in sanity checks");

  std::vector<const char*> argv{"sumset"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_error;
  }

  try {
    if (*verify) return detail::cmd_verify(o, out, err);
    if (*compute_f) return detail::cmd_compute_f(o, out);
    if (*scan) return detail::cmd_scan_conjecture(o, out, err);
    if (*witness) return detail::cmd_witness(o, out);
    if (*sarkozy) return detail::cmd_sarkozy(o, out, err);
    if (*summarize) return detail::cmd_summarize(summarize_path, csv_path, out);
    if (*selftest) return detail::cmd_selftest(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}

}  // namespace sumset::cli
