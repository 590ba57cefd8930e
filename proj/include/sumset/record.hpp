#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "sumset/numeric.hpp"

namespace sumset {

enum class Statement {
  lev,
  main,
  corollary,
  box,
  prop_i,
  prop_ii,
  growth,
  classes,
  sarkozy,
  conjecture_as_printed,
  conjecture_kappa,
  f_value,
  constructive,
  sharp,
};

inline constexpr std::array<std::pair<Statement, std::string_view>, 14> statement_names{{
    {Statement::lev, "lev"},
    {Statement::main, "main"},
    {Statement::corollary, "corollary"},
    {Statement::box, "box"},
    {Statement::prop_i, "prop_i"},
    {Statement::prop_ii, "prop_ii"},
    {Statement::growth, "growth"},
    {Statement::classes, "classes"},
    {Statement::sarkozy, "sarkozy"},
    {Statement::conjecture_as_printed, "conjecture_as_printed"},
    {Statement::conjecture_kappa, "conjecture_kappa"},
    {Statement::f_value, "f_value"},
    {Statement::constructive, "constructive"},
    {Statement::sharp, "sharp"},
}};

inline std::string_view to_string(Statement s) {
  for (const auto& [id, name] : statement_names)
    if (id == s) return name;
  return "?";
}

inline std::optional<Statement> parse_statement(std::string_view name) {
  for (const auto& [id, n] : statement_names)
    if (n == name) return id;
  return std::nullopt;
}

enum class Verdict { holds, violated, vacuous };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::vacuous: return "vacuous";
  }
  return "?";
}

inline std::optional<Verdict> parse_verdict(std::string_view s) {
  if (s == "holds") return Verdict::holds;
  if (s == "violated") return Verdict::violated;
  if (s == "vacuous") return Verdict::vacuous;
  return std::nullopt;
}

using Bound = std::variant<Int, Rational, Interval>;

inline std::string to_string(const Bound& b) {
  return std::visit(
      [](const auto& v) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Int>) {
          return std::to_string(v);
        } else {
          return v.to_string();
        }
      },
      b);
}

/// One checked instance: what the statement predicts, what brute force
/// observed, and the verdict.
struct VerificationRecord {
  Statement statement = Statement::main;
  std::string instance;
  std::optional<Bound> predicted;
  std::optional<Bound> observed;
  /// observed minus predicted; zero marks a tight instance.
  std::optional<Rational> slack;
  Verdict verdict = Verdict::vacuous;
  std::optional<std::string> witness;
  std::optional<std::string> note;
  /// Position in the canonical stream of a run; assigned by the driver.
  std::uint64_t ordinal = 0;

  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;

  /// Throws std::logic_error when the verdict is inconsistent with the fields.
  void check_invariants() const {
    if (verdict == Verdict::violated && !witness)
      throw std::logic_error("violated record without witness: " + instance);
    if (verdict == Verdict::vacuous && predicted)
      throw std::logic_error("vacuous record with a prediction: " + instance);
  }
};

inline VerificationRecord vacuous_record(Statement s, std::string instance, std::string reason) {
  VerificationRecord r;
  r.statement = s;
  r.instance = std::move(instance);
  r.verdict = Verdict::vacuous;
  r.note = std::move(reason);
  return r;
}

}  // namespace sumset
