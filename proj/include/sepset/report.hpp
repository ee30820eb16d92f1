#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepset/spec.hpp"
#include "sepset/verdict.hpp"

namespace sepset {

struct CheckResult {
  std::string check;
  std::string law;
  LawReport report;
  double millis = 0;  // not part of equality or of the stable output

  Status status() const { return report.overall(); }
  friend bool operator==(const CheckResult& a, const CheckResult& b) {
    return a.check == b.check && a.law == b.law && a.report == b.report;
  }
};

struct Report {
  std::vector<CheckResult> results;

  std::size_t count(Status s) const;
  bool any_failed() const { return count(Status::Fail) > 0; }
  bool any_skipped() const { return count(Status::SkippedBound) > 0; }
  friend bool operator==(const Report&, const Report&) = default;
};

struct RunOptions {
  std::string filter = "*";  // glob over law ids
  std::optional<std::size_t> max_atoms;
  std::optional<std::size_t> max_enum;
  unsigned jobs = 1;
};

/// Runs every selected (check, law) pair. Results come in declaration order,
/// then registry order within a check, however many jobs run at once.
/// Throws UnknownLawId, or the first contract error raised by a law.
Report run_checks(const spec::SpecDocument& doc, const RunOptions& opts = {});

enum class Format { Text, Machine };

inline constexpr int kSchemaVersion = 1;

std::string emit_report(const Report& r, Format f, bool timings = false);

/// Inverse of the machine format; throws ParseError on schema mismatch.
Report report_from_machine(std::string_view json);

}  // namespace sepset
