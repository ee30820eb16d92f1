#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sepset/complsep.hpp"
#include "sepset/error.hpp"
#include "sepset/families.hpp"
#include "sepset/kernel.hpp"

namespace sepset::spec {

/// `key tokens = value tokens`. Punctuation ({ } ( ) ,) is kept as
/// separate tokens; positions are diagnostics only and ignored by ==.
struct Entry {
  std::vector<std::string> key;
  std::vector<std::string> value;
  std::size_t line = 0;
  std::size_t col = 0;
  std::vector<std::size_t> value_cols;

  friend bool operator==(const Entry& a, const Entry& b) { return a.key == b.key && a.value == b.value; }
};

enum class SectionKind { Settings, Set, Ineq, Fn, Family, Check };

std::string_view to_string(SectionKind k);

struct Section {
  SectionKind kind = SectionKind::Set;
  std::string name;  // empty for settings
  std::vector<Entry> entries;
  std::size_t line = 0;
  std::size_t col = 0;

  const Entry* find(std::string_view key) const;

  friend bool operator==(const Section& a, const Section& b) {
    return a.kind == b.kind && a.name == b.name && a.entries == b.entries;
  }
};

/// Declarations in file order. Every reference points backwards.
struct SpecDocument {
  std::vector<Section> sections;

  std::size_t count(SectionKind k) const;
  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

/// A document error positioned at a token.
class SpecError : public Error {
 public:
  SpecError(ErrorCode code, std::size_t line, std::size_t col, std::string token, std::string expected,
            const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }
  const std::string& token() const { return token_; }
  const std::string& expected() const { return expected_; }
  /// The message without position or code prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t col_;
  std::string token_;
  std::string expected_;
  std::string detail_;
};

/// Syntax only; see parse_spec for the resolved form.
SpecDocument parse_syntax(std::string_view text);

/// Parses and resolves; throws SpecError for any defect, so a returned
/// document is always fully resolvable.
SpecDocument parse_spec(std::string_view text);
SpecDocument parse_spec_file(const std::filesystem::path& path);

/// Canonical text; parse_spec(print_spec(d)) == d.
std::string print_spec(const SpecDocument& doc);

struct CheckDecl {
  std::string name;
  std::vector<std::string> laws;
  std::map<std::string, std::vector<std::string>> params;
  std::size_t line = 0;
};

enum class FamilyKind { Functions, Metric, Set, Cs, Global };

/// The resolved objects of a document, by name.
struct Model {
  Bounds bounds;
  std::map<std::string, SetoidPtr> sets;
  std::map<std::string, IneqSet> ineqs;
  std::map<std::string, RealFn> fns;
  std::map<std::string, Map> maps;
  std::map<std::string, FnFamily> fn_families;  // functions and metric
  std::map<std::string, Family> set_families;
  std::map<std::string, CSFamily> cs_families;
  std::map<std::string, GlobalFamily> global_families;
  std::vector<CheckDecl> checks;

  /// Set families, and the underlying family of a cs-family.
  const Family* set_family(const std::string& name) const;
};

Model resolve(const SpecDocument& doc);

}  // namespace sepset::spec
