#pragma once

// Parallel scan driver. A job is a count of independent work units and a
// pure function from unit index to records. The driver evaluates units in
// batches across worker threads, appends each batch to the JSONL report in
// unit order, checkpoints after every batch, and can resume from the last
// checkpoint. Output is identical for any worker count.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "sumset/harness/report.hpp"
#include "sumset/record.hpp"

namespace sumset::harness {

using report::json;

struct ScanJob {
  std::string command;
  /// Everything that determines the record stream; compared on resume.
  json params = json::object();
  std::optional<std::uint64_t> seed;
  std::uint64_t units = 0;
  std::function<std::vector<VerificationRecord>(std::uint64_t)> evaluate;
};

struct DriverOptions {
  /// Report path; empty streams to the supplied ostream without checkpoints.
  std::filesystem::path out;
  bool resume = false;
  unsigned jobs = 1;
  std::uint64_t checkpoint_every = 10'000;
  /// Stop (without finalizing) after this many batches; simulates an interruption.
  std::optional<std::uint64_t> halt_after_batches;
  /// Fixed clock for reproducible manifests (seconds since the epoch).
  std::optional<std::int64_t> epoch;
  std::ostream* progress = nullptr;
};

struct RunOutcome {
  report::RunManifest manifest;
  bool completed = false;
};

class ResumeMismatch : public Error {
 public:
  using Error::Error;
};

inline std::filesystem::path checkpoint_path(const std::filesystem::path& out) {
  return out.string() + ".ckpt";
}

inline unsigned default_jobs() {
  if (const char* env = std::getenv("SUMSET_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace detail {

struct Checkpoint {
  std::string command;
  json params;
  std::optional<std::uint64_t> seed;
  std::uint64_t next_unit = 0;
  std::uint64_t next_ordinal = 0;
  std::uint64_t bytes = 0;
  report::Counts counts;
  std::map<std::string, report::Counts> by_statement;
  std::string started_at;
};

inline json to_json(const Checkpoint& c) {
  json per = json::object();
  for (const auto& [name, counts] : c.by_statement) per[name] = report::to_json(counts);
  json j{{"schema", report::schema_version},
         {"command", c.command},
         {"params", c.params},
         {"next_unit", c.next_unit},
         {"next_ordinal", c.next_ordinal},
         {"bytes", c.bytes},
         {"counts", report::to_json(c.counts)},
         {"by_statement", per},
         {"started_at", c.started_at}};
  if (c.seed) j["seed"] = *c.seed;
  return j;
}

inline Checkpoint checkpoint_from_json(const json& j) {
  Checkpoint c;
  c.command = j.at("command").get<std::string>();
  c.params = j.at("params");
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  c.next_unit = j.at("next_unit").get<std::uint64_t>();
  c.next_ordinal = j.at("next_ordinal").get<std::uint64_t>();
  c.bytes = j.at("bytes").get<std::uint64_t>();
  c.counts = report::counts_from_json(j.at("counts"));
  for (const auto& [name, counts] : j.at("by_statement").items())
    c.by_statement[name] = report::counts_from_json(counts);
  c.started_at = j.at("started_at").get<std::string>();
  return c;
}

inline void write_atomically(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + tmp.string());
    f << content;
    if (!f.flush()) throw Error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline std::string now_string(const DriverOptions& opts) {
  if (opts.epoch) return report::iso_time(static_cast<std::time_t>(*opts.epoch));
  return report::iso_time(std::chrono::system_clock::to_time_t(std::chrono::system_clock::now()));
}

// Evaluates units [begin, end) into slots indexed from begin.
inline std::vector<std::vector<VerificationRecord>> evaluate_batch(const ScanJob& job, std::uint64_t begin,
                                                                   std::uint64_t end, unsigned jobs) {
  std::vector<std::vector<VerificationRecord>> slots(static_cast<std::size_t>(end - begin));
  std::atomic<std::uint64_t> next{begin};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::uint64_t u = next.fetch_add(1);
      if (u >= end) return;
      try {
        slots[static_cast<std::size_t>(u - begin)] = job.evaluate(u);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(end);
        return;
      }
    }
  };
  const auto threads = static_cast<unsigned>(std::min<std::uint64_t>(jobs, end - begin));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return slots;
}

}  // namespace detail

/// Runs `job`, writing JSONL records followed by a manifest line.
inline RunOutcome run_scan(const ScanJob& job, const DriverOptions& opts, std::ostream* stream = nullptr) {
  const bool to_file = !opts.out.empty();
  if (!to_file && stream == nullptr) throw Error("run_scan needs an output path or stream");
  const std::uint64_t batch = std::max<std::uint64_t>(1, opts.checkpoint_every);

  detail::Checkpoint state;
  state.command = job.command;
  state.params = job.params;
  state.seed = job.seed;
  state.started_at = detail::now_string(opts);

  std::ofstream file;
  if (to_file) {
    const auto ckpt = checkpoint_path(opts.out);
    if (opts.resume && std::filesystem::exists(ckpt)) {
      std::ifstream in(ckpt);
      const detail::Checkpoint saved = detail::checkpoint_from_json(json::parse(in));
      if (saved.command != job.command || saved.params != job.params || saved.seed != job.seed)
        throw ResumeMismatch("checkpoint " + ckpt.string() + " was written by a different run");
      if (!std::filesystem::exists(opts.out) || std::filesystem::file_size(opts.out) < saved.bytes)
        throw ResumeMismatch("report " + opts.out.string() + " is shorter than its checkpoint");
      std::filesystem::resize_file(opts.out, saved.bytes);
      state = saved;
      file.open(opts.out, std::ios::binary | std::ios::app);
    } else {
      file.open(opts.out, std::ios::binary | std::ios::trunc);
    }
    if (!file) throw Error("cannot open " + opts.out.string());
  }
  std::ostream& sink = to_file ? static_cast<std::ostream&>(file) : *stream;

  std::uint64_t batches = 0;
  while (state.next_unit < job.units) {
    const std::uint64_t end = std::min(job.units, state.next_unit + batch);
    auto slots = detail::evaluate_batch(job, state.next_unit, end, std::max(1U, opts.jobs));
    for (auto& records : slots) {
      for (auto& r : records) {
        r.check_invariants();
        r.ordinal = state.next_ordinal++;
        state.counts.add(r.verdict);
        state.by_statement[std::string(to_string(r.statement))].add(r.verdict);
        sink << report::to_line(r) << '\n';
      }
    }
    sink.flush();
    if (!sink) throw Error("write failure on report output");
    state.next_unit = end;
    ++batches;
    if (to_file) {
      state.bytes = static_cast<std::uint64_t>(std::filesystem::file_size(opts.out));
      detail::write_atomically(checkpoint_path(opts.out), detail::to_json(state).dump());
    }
    if (opts.progress)
      *opts.progress << "progress: " << state.next_unit << "/" << job.units << " units, "
                     << state.next_ordinal << " records\n";
    if (opts.halt_after_batches && batches >= *opts.halt_after_batches && state.next_unit < job.units) {
      RunOutcome halted;
      halted.manifest.command = job.command;
      halted.manifest.params = job.params;
      halted.manifest.seed = job.seed;
      halted.manifest.started_at = state.started_at;
      halted.manifest.counts = state.counts;
      halted.manifest.by_statement = state.by_statement;
      return halted;
    }
  }

  RunOutcome done;
  done.completed = true;
  report::RunManifest& m = done.manifest;
  m.command = job.command;
  m.params = job.params;
  m.seed = job.seed;
  m.started_at = state.started_at;
  m.finished_at = detail::now_string(opts);
  m.counts = state.counts;
  m.by_statement = state.by_statement;
  sink << report::to_json(m).dump() << '\n';
  sink.flush();
  if (!sink) throw Error("write failure on report output");
  if (to_file) {
    file.close();
    std::filesystem::remove(checkpoint_path(opts.out));
  }
  return done;
}

}  // namespace sumset::harness
