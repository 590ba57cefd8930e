#pragma once

#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sumset/harness/report.hpp"

namespace sumset::harness {

struct StatementSummary {
  report::Counts counts;
  /// Smallest slack among records that hold, and where it occurs.
  std::optional<Rational> tightest;
  std::vector<std::string> tightest_instances;
  std::size_t tightest_count = 0;
  std::vector<std::string> violated_instances;
};

struct Summary {
  std::map<std::string, StatementSummary> by_statement;
  std::size_t records = 0;
};

inline constexpr std::size_t max_listed_instances = 5;

inline Summary summarize(const std::vector<VerificationRecord>& records) {
  Summary s;
  s.records = records.size();
  for (const auto& r : records) {
    StatementSummary& st = s.by_statement[std::string(to_string(r.statement))];
    st.counts.add(r.verdict);
    if (r.verdict == Verdict::violated && st.violated_instances.size() < max_listed_instances)
      st.violated_instances.push_back(r.instance + (r.witness ? " -> " + *r.witness : ""));
    if (r.verdict != Verdict::holds || !r.slack) continue;
    if (!st.tightest || *r.slack < *st.tightest) {
      st.tightest = *r.slack;
      st.tightest_instances.clear();
      st.tightest_count = 0;
    }
    if (*r.slack == *st.tightest) {
      ++st.tightest_count;
      if (st.tightest_instances.size() < max_listed_instances) st.tightest_instances.push_back(r.instance);
    }
  }
  return s;
}

inline void print_summary(const Summary& s, std::ostream& out) {
  if (s.records == 0) {
    out << "no records\n";
    return;
  }
  out << "statement                 total     holds  violated   vacuous  min-slack\n";
  for (const auto& [name, st] : s.by_statement) {
    char line[160];
    std::snprintf(line, sizeof line, "%-22s %8llu  %8llu  %8llu  %8llu  %s\n", name.c_str(),
                  static_cast<unsigned long long>(st.counts.total()),
                  static_cast<unsigned long long>(st.counts.holds),
                  static_cast<unsigned long long>(st.counts.violated),
                  static_cast<unsigned long long>(st.counts.vacuous),
                  st.tightest ? st.tightest->to_string().c_str() : "-");
    out << line;
  }
  for (const auto& [name, st] : s.by_statement) {
    if (st.counts.violated == 0) continue;
    out << name << ": VIOLATED on " << st.counts.violated << " instance(s)\n";
    for (const auto& inst : st.violated_instances) out << "  " << inst << '\n';
  }
  for (const auto& [name, st] : s.by_statement) {
    if (!st.tightest) continue;
    out << name << ": slack " << st.tightest->to_string() << " on " << st.tightest_count << " instance(s)\n";
    for (const auto& inst : st.tightest_instances) out << "  " << inst << '\n';
  }
}

namespace detail {
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}
}  // namespace detail

inline void write_csv(const std::vector<VerificationRecord>& records, std::ostream& out) {
  out << "ordinal,statement,verdict,predicted,observed,slack,instance\n";
  for (const auto& r : records) {
    out << r.ordinal << ',' << to_string(r.statement) << ',' << to_string(r.verdict) << ','
        << detail::csv_field(r.predicted ? to_string(*r.predicted) : "") << ','
        << detail::csv_field(r.observed ? to_string(*r.observed) : "") << ','
        << (r.slack ? r.slack->to_string() : "") << ',' << detail::csv_field(r.instance) << '\n';
  }
}

}  // namespace sumset::harness
