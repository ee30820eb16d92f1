#include "sepset/verdict.hpp"

namespace sepset {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not-applicable";
    case Status::SkippedBound: return "skipped-bound";
  }
  return "unknown";
}

Witness Witness::violation(std::vector<std::string> atoms, std::string detail) {
  Witness w;
  w.kind = Kind::Violation;
  w.atoms = std::move(atoms);
  w.detail = std::move(detail);
  return w;
}

Witness Witness::inequality(std::vector<std::string> atoms, std::string member, Rat gap) {
  Witness w;
  w.kind = Kind::Inequality;
  w.atoms = std::move(atoms);
  w.member = std::move(member);
  w.gap = gap;
  return w;
}

Verdict Verdict::pass(std::string note) { return {Status::Pass, std::nullopt, std::move(note)}; }

Verdict Verdict::fail(Witness w, std::string note) { return {Status::Fail, std::move(w), std::move(note)}; }

Verdict Verdict::not_applicable(std::string note) {
  return {Status::NotApplicable, std::nullopt, std::move(note)};
}

Verdict Verdict::skipped(std::string note) { return {Status::SkippedBound, std::nullopt, std::move(note)}; }

const Verdict* LawReport::find(std::string_view id) const {
  for (const auto& c : clauses) {
    if (c.id == id) return &c.verdict;
  }
  return nullptr;
}

Status LawReport::overall() const {
  bool skipped = false, passed = false;
  for (const auto& c : clauses) {
    switch (c.verdict.status) {
      case Status::Fail: return Status::Fail;
      case Status::SkippedBound: skipped = true; break;
      case Status::Pass: passed = true; break;
      case Status::NotApplicable: break;
    }
  }
  if (skipped) return Status::SkippedBound;
  return passed ? Status::Pass : Status::NotApplicable;
}

Verdict summarize(const LawReport& r) {
  for (const auto& c : r.clauses)
    if (c.verdict.failed()) {
      Verdict v = c.verdict;
      v.note = c.id + (v.note.empty() ? "" : ": " + v.note);
      return v;
    }
  switch (r.overall()) {
    case Status::SkippedBound: return Verdict::skipped(r.law + " hit an enumeration bound");
    case Status::NotApplicable: return Verdict::not_applicable(r.law + " has no applicable clause");
    default: return Verdict::pass();
  }
}

}  // namespace sepset
