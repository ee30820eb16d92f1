#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepset/spec.hpp"
#include "sepset/verdict.hpp"

namespace sepset {

/// What a check parameter must name.
enum class ParamKind {
  Set,
  Ineq,
  Map,
  Functions,   // a function family (functions or metric)
  SetFamily,   // a set family, or the base of a cs-family
  CsFamily,
  Global,
  Maps,        // list of maps
  FunctionsList,
  Rationals,
  Atoms,       // free atom names, resolved by the law
  Laws,        // law ids
};

struct ParamSpec {
  std::string key;
  ParamKind kind;
  bool required = false;
};

struct LawInfo {
  std::string id;
  std::string module;
  std::string summary;
  std::vector<ParamSpec> params;
};

/// Every law id the runner understands, in reporting order.
const std::vector<LawInfo>& law_registry();
const LawInfo* find_law(std::string_view id);

/// Throws a positioned SpecError when a parameter is missing, unknown or
/// names the wrong kind of declaration.
void validate_check(const spec::Model& model, const spec::CheckDecl& check, const spec::Section& where);

/// Runs one law of a check. CarrierTooLarge becomes a skipped clause; other
/// contract errors propagate.
LawReport run_law(const LawInfo& law, const spec::Model& model, const spec::CheckDecl& check, const Bounds& bounds);

}  // namespace sepset
