#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepset/rat.hpp"

namespace sepset {

enum class Status { Pass, Fail, NotApplicable, SkippedBound };

std::string_view to_string(Status s);

/// Evidence attached to a verdict: either the function that witnesses an
/// inequality (with its positive gap) or the tuple of atoms breaking a law.
struct Witness {
  enum class Kind { Inequality, Violation };

  Kind kind = Kind::Violation;
  std::vector<std::string> atoms;
  std::string member;  // witnessing function, for inequality witnesses
  std::optional<Rat> gap;
  std::string detail;

  static Witness violation(std::vector<std::string> atoms, std::string detail = {});
  static Witness inequality(std::vector<std::string> atoms, std::string member, Rat gap);

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  Status status = Status::Pass;
  std::optional<Witness> witness;
  std::string note;

  static Verdict pass(std::string note = {});
  static Verdict fail(Witness w, std::string note = {});
  static Verdict not_applicable(std::string note);
  static Verdict skipped(std::string note);

  bool holds() const { return status == Status::Pass; }
  bool failed() const { return status == Status::Fail; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Clause {
  std::string id;
  Verdict verdict;

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Outcome of one law check: named clauses in evaluation order.
struct LawReport {
  std::string law;
  std::vector<Clause> clauses;

  void add(std::string id, Verdict v) { clauses.push_back({std::move(id), std::move(v)}); }
  const Verdict* find(std::string_view id) const;
  /// Fail if any clause failed, else skipped-bound if any was skipped,
  /// else pass if any passed, else not-applicable.
  Status overall() const;
  bool any_failed() const { return overall() == Status::Fail; }

  friend bool operator==(const LawReport&, const LawReport&) = default;
};

/// Collapses a report to one verdict: the first failing clause (note
/// prefixed with its id), else skipped, else pass, else not-applicable.
Verdict summarize(const LawReport& r);

/// Maps `cond` to pass or to a failure carrying `w`.
inline Verdict verdict_from(bool cond, const std::optional<Witness>& w) {
  if (cond) return Verdict::pass();
  return Verdict::fail(w.value_or(Witness{}));
}

}  // namespace sepset
