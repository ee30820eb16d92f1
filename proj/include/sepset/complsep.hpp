#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sepset/induced.hpp"
#include "sepset/kernel.hpp"

namespace sepset {

/// A value that passed validation, or the verdict explaining why not.
template <class T>
struct Validated {
  std::optional<T> value;
  Verdict verdict;

  explicit operator bool() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

/// (X, =_X, ≠_X ; F) with ≠_X equal to ≠_(X,F) and F separating.
struct ComplSep {
  IneqSet ineq;
  FnFamily family;

  const SetoidPtr& carrier() const { return ineq.base; }
  std::size_t size() const { return ineq.size(); }
};

/// Checks both invariants. The failing verdict names the pair and whether the
/// inequality mismatched (detail "neq-mismatch") or separation failed
/// (detail "separation").
Validated<ComplSep> validate_complsep(const IneqSet& x, const FnFamily& f);

/// Builds (X, =_X, ≠_(X,F) ; F); the result still has to pass validation.
Validated<ComplSep> complsep_from_family(const SetoidPtr& x, const FnFamily& f);

/// g ∘ h ∈ src_family for every g in dst_family. Throws DomainMismatch when h
/// does not go between the two carriers.
Verdict is_affine(const Map& h, const FnFamily& src_family, const FnFamily& dst_family);
Verdict is_affine(const Map& h, const ComplSep& src, const ComplSep& dst);

/// A finite sample of ℝ as a completely separated set with family {id}.
ComplSep real_line(std::vector<Rat> sample);
/// A real-valued f viewed as an arrow into a sample containing its values.
Map as_arrow(const RealFn& f, const ComplSep& line);

struct Provenance {
  bool left = true;
  std::size_t source = 0;  // member index in the factor's family
};

struct CsProduct {
  ComplSep cs;
  std::vector<std::pair<std::size_t, std::size_t>> coords;
  std::vector<Provenance> provenance;  // per member of cs.family
  Map pr_first;
  Map pr_second;
  LawReport checks;
};

/// X × Y with family F ⊗ G = {f ∘ pr_X} ∪ {g ∘ pr_Y}.
CsProduct cs_product(const ComplSep& a, const ComplSep& b, const Bounds& bounds = {});

struct CsFunctionSpace {
  ComplSep cs;
  std::vector<Map> tables;
  LawReport checks;
};

/// 𝔽(X, Y) with family {φ_{x,g} | x ∈ X, g ∈ G}, φ_{x,g}(h) = g(h(x)).
CsFunctionSpace cs_funspace(const ComplSep& a, const ComplSep& b, const Bounds& bounds = {});

struct CsSubset {
  ComplSep cs;
  LawReport checks;
};

/// Pulls the family back along i_A. Throws NotInjective.
CsSubset cs_subset(const ComplSep& a, const Map& i_a);

}  // namespace sepset
