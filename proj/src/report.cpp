#include "sepset/report.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <future>
#include <json.hpp>

#include "sepset/laws.hpp"

namespace sepset {

using nlohmann::ordered_json;

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [&](const CheckResult& r) { return r.status() == s; }));
}

namespace {

struct Job {
  const spec::CheckDecl* check;
  const LawInfo* law;
};

CheckResult run_job(const Job& j, const spec::Model& model, const Bounds& bounds) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r{j.check->name, j.law->id, run_law(*j.law, model, *j.check, bounds), 0};
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

Report run_checks(const spec::SpecDocument& doc, const RunOptions& opts) {
  auto model = spec::resolve(doc);
  Bounds bounds = model.bounds;
  if (opts.max_atoms) bounds.max_atoms = *opts.max_atoms;
  if (opts.max_enum) bounds.max_enum = *opts.max_enum;

  std::vector<Job> jobs;
  for (const auto& c : model.checks)
    for (const auto& law : law_registry()) {
      if (std::find(c.laws.begin(), c.laws.end(), law.id) == c.laws.end()) continue;
      if (fnmatch(opts.filter.c_str(), law.id.c_str(), 0) != 0) continue;
      jobs.push_back({&c, &law});
    }

  Report rep;
  rep.results.resize(jobs.size());
  const std::size_t width = std::max(1u, opts.jobs);
  for (std::size_t start = 0; start < jobs.size(); start += width) {
    const auto stop = std::min(jobs.size(), start + width);
    if (width == 1) {
      rep.results[start] = run_job(jobs[start], model, bounds);
      continue;
    }
    std::vector<std::future<CheckResult>> running;
    for (auto k = start; k < stop; ++k)
      running.push_back(std::async(std::launch::async, run_job, std::cref(jobs[k]), std::cref(model), std::cref(bounds)));
    for (auto k = start; k < stop; ++k) rep.results[k] = running[k - start].get();
  }
  return rep;
}

// ---------------------------------------------------------------- machine format

namespace {

ordered_json witness_json(const Witness& w) {
  ordered_json j;
  j["kind"] = w.kind == Witness::Kind::Inequality ? "inequality" : "violation";
  j["atoms"] = w.atoms;
  j["member"] = w.member;
  j["gap"] = w.gap ? ordered_json(w.gap->str()) : ordered_json(nullptr);
  j["detail"] = w.detail;
  return j;
}

ordered_json verdict_json(const std::string& id, const Verdict& v) {
  ordered_json j;
  j["id"] = id;
  j["status"] = std::string(to_string(v.status));
  j["note"] = v.note;
  j["witness"] = v.witness ? witness_json(*v.witness) : ordered_json(nullptr);
  return j;
}

Status status_from(const std::string& s) {
  for (auto st : {Status::Pass, Status::Fail, Status::NotApplicable, Status::SkippedBound})
    if (to_string(st) == s) return st;
  throw Error(ErrorCode::ParseError, "unknown status '" + s + "'");
}

Witness witness_from(const ordered_json& j) {
  Witness w;
  w.kind = j.at("kind").get<std::string>() == "inequality" ? Witness::Kind::Inequality : Witness::Kind::Violation;
  w.atoms = j.at("atoms").get<std::vector<std::string>>();
  w.member = j.at("member").get<std::string>();
  if (!j.at("gap").is_null()) w.gap = Rat::parse(j.at("gap").get<std::string>());
  w.detail = j.at("detail").get<std::string>();
  return w;
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

std::string witness_text(const Witness& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.atoms.size(); ++k) s += (k ? ", " : "") + w.atoms[k];
  s += ")";
  if (!w.member.empty()) s += " by " + w.member;
  if (w.gap) s += " gap " + w.gap->str();
  if (!w.detail.empty()) s += " " + w.detail;
  return s;
}

std::string emit_text(const Report& r, bool timings) {
  std::string out;
  std::size_t width = 4;
  for (const auto& c : r.results) width = std::max(width, c.check.size());
  for (const auto& c : r.results) {
    auto st = upper(to_string(c.status()));
    out += st + std::string(16 - std::min<std::size_t>(15, st.size()), ' ');
    out += c.check + std::string(width + 2 - c.check.size(), ' ') + c.law;
    if (timings) out += "  (" + std::to_string(static_cast<long long>(c.millis * 1000)) + " us)";
    out += '\n';
    for (const auto& cl : c.report.clauses) {
      const auto& v = cl.verdict;
      if (v.status != Status::Fail && v.status != Status::SkippedBound) continue;
      out += "    " + cl.id + ": " + std::string(to_string(v.status));
      if (v.witness) out += " " + witness_text(*v.witness);
      if (!v.note.empty()) out += " [" + v.note + "]";
      out += '\n';
    }
  }
  out += "summary: " + std::to_string(r.count(Status::Pass)) + " pass, " + std::to_string(r.count(Status::Fail)) + " fail, " +
         std::to_string(r.count(Status::NotApplicable)) + " not-applicable, " + std::to_string(r.count(Status::SkippedBound)) +
         " skipped-bound\n";
  return out;
}

}  // namespace

std::string emit_report(const Report& r, Format f, bool timings) {
  if (f == Format::Text) return emit_text(r, timings);
  ordered_json doc;
  doc["schemaVersion"] = kSchemaVersion;
  doc["checks"] = ordered_json::array();
  for (const auto& c : r.results) {
    ordered_json j;
    j["check"] = c.check;
    j["law"] = c.law;
    j["status"] = std::string(to_string(c.status()));
    j["clauses"] = ordered_json::array();
    j["hypotheses"] = ordered_json::array();
    for (const auto& cl : c.report.clauses) {
      j["clauses"].push_back(verdict_json(cl.id, cl.verdict));
      if (cl.verdict.status == Status::NotApplicable) j["hypotheses"].push_back({{"clause", cl.id}, {"note", cl.verdict.note}});
    }
    doc["checks"].push_back(std::move(j));
  }
  doc["summary"] = {{"pass", r.count(Status::Pass)},
                    {"fail", r.count(Status::Fail)},
                    {"not-applicable", r.count(Status::NotApplicable)},
                    {"skipped-bound", r.count(Status::SkippedBound)}};
  if (timings) {
    ordered_json t = ordered_json::array();
    for (const auto& c : r.results) t.push_back({{"check", c.check}, {"law", c.law}, {"millis", c.millis}});
    doc["timings"] = std::move(t);
  }
  return doc.dump(2) + "\n";
}

Report report_from_machine(std::string_view text) {
  try {
    auto doc = ordered_json::parse(text);
    if (doc.at("schemaVersion").get<int>() != kSchemaVersion) throw Error(ErrorCode::ParseError, "unsupported schemaVersion");
    Report r;
    for (const auto& j : doc.at("checks")) {
      CheckResult c{j.at("check").get<std::string>(), j.at("law").get<std::string>(), {j.at("law").get<std::string>(), {}}, 0};
      for (const auto& cl : j.at("clauses")) {
        Verdict v{status_from(cl.at("status").get<std::string>()), std::nullopt, cl.at("note").get<std::string>()};
        if (!cl.at("witness").is_null()) v.witness = witness_from(cl.at("witness"));
        c.report.add(cl.at("id").get<std::string>(), std::move(v));
      }
      r.results.push_back(std::move(c));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

}  // namespace sepset
