#include "sepset/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>

#include "sepset/fixtures.hpp"
#include "sepset/laws.hpp"
#include "sepset/report.hpp"
#include "sepset/spec.hpp"

namespace sepset {

namespace {

struct AuditArgs {
  std::string file;
  std::string check = "*";
  std::string format = "text";
  std::optional<std::size_t> max_atoms;
  std::optional<std::size_t> max_enum;
  unsigned jobs = 1;
  bool strict_bounds = false;
  bool timings = false;
};

int audit(const AuditArgs& a, std::ostream& out, std::ostream& err) {
  try {
    auto doc = spec::parse_spec_file(a.file);
    RunOptions opts{a.check, a.max_atoms, a.max_enum, a.jobs};
    auto rep = run_checks(doc, opts);
    out << emit_report(rep, a.format == "machine" ? Format::Machine : Format::Text, a.timings);
    if (rep.any_failed()) return kExitFail;
    if (a.strict_bounds && rep.any_skipped()) return kExitBound;
    return kExitPass;
  } catch (const spec::SpecError& e) {
    err << a.file << ":";
    if (e.line() > 0) err << e.line() << ":" << e.col() << ":";
    err << " " << to_string(e.code()) << ": " << e.detail();
    if (!e.token().empty()) err << " (at '" << e.token() << "')";
    err << "\n";
    if (!e.expected().empty()) err << "  expected: " << e.expected() << "\n";
  } catch (const Error& e) {
    err << a.file << ": " << e.what() << "\n";
  }
  return kExitInvalid;
}

int fixtures(const std::string& name, const std::string& dir, std::ostream& out, std::ostream& err) {
  std::vector<const Fixture*> chosen;
  if (name.empty()) {
    for (const auto& f : builtin_fixtures()) chosen.push_back(&f);
  } else if (const auto* f = find_fixture(name)) {
    chosen.push_back(f);
  } else {
    err << "unknown fixture '" << name << "' (EX, metric, global-2-family)\n";
    return kExitInvalid;
  }
  for (const auto* f : chosen) {
    if (dir.empty()) {
      if (chosen.size() > 1) out << "# ---- " << f->name << "\n";
      out << f->text;
      continue;
    }
    auto path = std::filesystem::path(dir) / (f->name + ".sepset");
    std::ofstream file(path, std::ios::binary);
    if (!(file << f->text)) {
      err << "cannot write " << path.string() << "\n";
      return kExitInvalid;
    }
    out << path.string() << "\n";
  }
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite model checker for completely separated sets", "sepset"};
  app.require_subcommand(1);

  AuditArgs a;
  auto* audit_cmd = app.add_subcommand("audit", "Run the checks of a spec document");
  audit_cmd->add_option("file", a.file, "Spec document")->required();
  audit_cmd->add_option("--check", a.check, "Glob over law ids");
  audit_cmd->add_option("--format", a.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  audit_cmd->add_option("--max-atoms", a.max_atoms, "Override the document's max-atoms")->check(CLI::PositiveNumber);
  audit_cmd->add_option("--max-enum", a.max_enum, "Override the document's max-enum")->check(CLI::PositiveNumber);
  audit_cmd->add_option("--jobs", a.jobs, "Checks evaluated at once")->check(CLI::PositiveNumber);
  audit_cmd->add_flag("--strict-bounds", a.strict_bounds, "Exit 3 when a check hit a bound");
  audit_cmd->add_flag("--timings", a.timings, "Add per-check timings");

  std::string fixture_name, fixture_dir;
  auto* fix_cmd = app.add_subcommand("fixtures", "Print or write the built-in documents");
  fix_cmd->add_option("--name", fixture_name, "EX, metric or global-2-family");
  fix_cmd->add_option("--out", fixture_dir, "Directory to write <name>.sepset files into");

  auto* laws_cmd = app.add_subcommand("laws", "List the registered law ids");
  auto* version_cmd = app.add_subcommand("version", "Print the version");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInvalid;
  }

  if (*audit_cmd) return audit(a, out, err);
  if (*fix_cmd) return fixtures(fixture_name, fixture_dir, out, err);
  if (*laws_cmd) {
    for (const auto& l : law_registry()) out << l.id << "\t" << l.module << "\t" << l.summary << "\n";
    return kExitPass;
  }
  if (*version_cmd) out << "sepset " << kVersion << "\n";
  return kExitPass;
}

}  // namespace sepset
