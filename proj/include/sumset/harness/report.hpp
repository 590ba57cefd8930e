#pragma once

// JSONL encoding of verification records and the run manifest footer.

#include <ctime>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumset/record.hpp"

namespace sumset::report {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

#ifdef SUMSET_VERSION
inline constexpr const char* version = SUMSET_VERSION;
#else
inline constexpr const char* version = "0.1.0";
#endif

class ReportError : public Error {
 public:
  ReportError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline json rational_to_json(const Rational& q) { return json{{"num", q.num}, {"den", q.den}}; }

inline Rational rational_from_json(const json& j) {
  return Rational(j.at("num").get<Int>(), j.at("den").get<Int>());
}

inline json bound_to_json(const Bound& b) {
  if (const Int* v = std::get_if<Int>(&b)) return *v;
  if (const Rational* q = std::get_if<Rational>(&b)) return rational_to_json(*q);
  const Interval& iv = std::get<Interval>(b);
  return json{{"lo", iv.lo}, {"hi", iv.hi}};
}

inline Bound bound_from_json(const json& j) {
  if (j.is_number_integer()) return j.get<Int>();
  if (j.is_object() && j.contains("num")) return rational_from_json(j);
  if (j.is_object() && j.contains("lo")) return Interval{j.at("lo").get<Int>(), j.at("hi").get<Int>()};
  throw Error("unrecognized bound " + j.dump());
}

inline std::optional<std::string> variant_of(Statement s) {
  if (s == Statement::conjecture_as_printed) return "as-printed";
  if (s == Statement::conjecture_kappa) return "kappa";
  return std::nullopt;
}

inline json to_json(const VerificationRecord& r) {
  json j;
  j["schema"] = schema_version;
  j["ordinal"] = r.ordinal;
  j["statement"] = std::string(to_string(r.statement));
  if (auto v = variant_of(r.statement)) j["variant"] = *v;
  j["instance"] = r.instance;
  if (r.predicted) j["predicted"] = bound_to_json(*r.predicted);
  if (r.observed) j["observed"] = bound_to_json(*r.observed);
  if (r.slack) j["slack"] = rational_to_json(*r.slack);
  j["verdict"] = std::string(to_string(r.verdict));
  if (r.witness) j["witness"] = *r.witness;
  if (r.note) j["note"] = *r.note;
  return j;
}

inline VerificationRecord record_from_json(const json& j) {
  VerificationRecord r;
  const auto statement = parse_statement(j.at("statement").get<std::string>());
  if (!statement) throw Error("unknown statement " + j.at("statement").dump());
  const auto verdict = parse_verdict(j.at("verdict").get<std::string>());
  if (!verdict) throw Error("unknown verdict " + j.at("verdict").dump());
  r.statement = *statement;
  r.verdict = *verdict;
  r.ordinal = j.at("ordinal").get<std::uint64_t>();
  r.instance = j.at("instance").get<std::string>();
  if (j.contains("predicted")) r.predicted = bound_from_json(j["predicted"]);
  if (j.contains("observed")) r.observed = bound_from_json(j["observed"]);
  if (j.contains("slack")) r.slack = rational_from_json(j["slack"]);
  if (j.contains("witness")) r.witness = j["witness"].get<std::string>();
  if (j.contains("note")) r.note = j["note"].get<std::string>();
  return r;
}

inline std::string to_line(const VerificationRecord& r) { return to_json(r).dump(); }

struct Counts {
  std::uint64_t holds = 0;
  std::uint64_t violated = 0;
  std::uint64_t vacuous = 0;

  std::uint64_t total() const noexcept { return holds + violated + vacuous; }

  void add(Verdict v) {
    switch (v) {
      case Verdict::holds: ++holds; break;
      case Verdict::violated: ++violated; break;
      case Verdict::vacuous: ++vacuous; break;
    }
  }

  friend bool operator==(const Counts&, const Counts&) = default;
};

inline json to_json(const Counts& c) {
  return json{{"total", c.total()}, {"holds", c.holds}, {"violated", c.violated}, {"vacuous", c.vacuous}};
}

inline Counts counts_from_json(const json& j) {
  Counts c;
  c.holds = j.at("holds").get<std::uint64_t>();
  c.violated = j.at("violated").get<std::uint64_t>();
  c.vacuous = j.at("vacuous").get<std::uint64_t>();
  if (j.contains("total") && j["total"].get<std::uint64_t>() != c.total())
    throw Error("manifest counts do not add up");
  return c;
}

struct RunManifest {
  std::string command;
  json params = json::object();
  std::optional<std::uint64_t> seed;
  std::string started_at;
  std::optional<std::string> finished_at;
  Counts counts;
  std::map<std::string, Counts> by_statement;
  std::string version = report::version;
};

inline json to_json(const RunManifest& m) {
  json j;
  j["manifest"] = true;
  j["schema"] = schema_version;
  j["command"] = m.command;
  j["params"] = m.params;
  if (m.seed) j["seed"] = *m.seed;
  j["started_at"] = m.started_at;
  if (m.finished_at) j["finished_at"] = *m.finished_at;
  j["counts"] = to_json(m.counts);
  json per = json::object();
  for (const auto& [name, c] : m.by_statement) per[name] = to_json(c);
  j["by_statement"] = per;
  j["version"] = m.version;
  return j;
}

inline RunManifest manifest_from_json(const json& j) {
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.params = j.at("params");
  if (j.contains("seed")) m.seed = j["seed"].get<std::uint64_t>();
  m.started_at = j.at("started_at").get<std::string>();
  if (j.contains("finished_at")) m.finished_at = j["finished_at"].get<std::string>();
  m.counts = counts_from_json(j.at("counts"));
  if (j.contains("by_statement"))
    for (const auto& [name, c] : j["by_statement"].items()) m.by_statement[name] = counts_from_json(c);
  m.version = j.at("version").get<std::string>();
  return m;
}

inline bool is_manifest(const json& j) { return j.is_object() && j.value("manifest", false); }

inline std::string iso_time(std::time_t t) {
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Parsed content of a JSONL report.
struct ReportFile {
  std::vector<VerificationRecord> records;
  std::vector<RunManifest> manifests;
};

/// Reads records and manifests; blank lines are skipped, anything else that
/// fails to parse is a ReportError carrying the 1-based line number.
inline ReportFile read_report(std::istream& in) {
  ReportFile out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json j = json::parse(line);
      if (is_manifest(j)) {
        out.manifests.push_back(manifest_from_json(j));
      } else {
        out.records.push_back(record_from_json(j));
      }
    } catch (const std::exception& e) {
      throw ReportError(lineno, e.what());
    }
  }
  return out;
}

}  // namespace sumset::report
