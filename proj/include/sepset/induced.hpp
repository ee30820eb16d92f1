#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepset/kernel.hpp"

namespace sepset {

/// Equality and inequality on a carrier induced by a family of real-valued
/// functions, with one witnessing member stored per apart pair.
struct InducedRelations {
  SetoidPtr carrier;
  FnFamily family;
  SetoidPtr eq_induced;  // carrier atoms re-partitioned by =_(X,F)
  Relation neq_induced;
  std::vector<std::optional<std::size_t>> witness_of;  // row-major, member index

  std::size_t size() const { return carrier->size(); }
  bool eq(std::size_t x, std::size_t y) const { return eq_induced->eq(x, y); }
  bool apart(std::size_t x, std::size_t y) const { return neq_induced(x, y); }
  std::optional<std::size_t> witness(std::size_t x, std::size_t y) const { return witness_of[x * size() + y]; }
  /// The witnessing member with its gap, for an apart pair.
  std::optional<Witness> witness_for(std::size_t x, std::size_t y) const;
  /// The carrier re-equipped with (=_(X,F), ≠_(X,F)).
  IneqSet as_ineq_set() const { return {eq_induced, neq_induced}; }
};

/// Throws CarrierMismatch when F lives on another carrier.
InducedRelations induce(const SetoidPtr& x, const FnFamily& f);

struct SeparationResult {
  bool separating = false;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;  // x =_(X,F) y, x ≠_X y
};

SeparationResult is_separating(const SetoidPtr& x, const FnFamily& f);

/// {x | x ≠_(X,F) x}; always empty over exact rationals.
std::vector<std::string> empty_subset(const SetoidPtr& x, const FnFamily& f);

/// Inclusions for F ⊆ F′. Throws NotASubfamily if some member of F is not
/// pointwise a member of F′.
LawReport monotonicity_check(const SetoidPtr& x, const FnFamily& f, const FnFamily& f_super);

/// The Remark clauses (i)-(vii) on a set with an inequality and a family.
LawReport f1_report(const IneqSet& x, const FnFamily& f);

/// Symmetric rational table on atom pairs, indexed [z][z′].
using DistanceTable = std::vector<std::vector<Rat>>;

/// U₀(Z) = {d_z | z ∈ Z}. Checks d(z,z) = 0, symmetry, compatibility with
/// =_Z and, unless `pseudometric`, the triangle inequality. Throws NotAMetric
/// naming the violated instance.
FnFamily metric_family(const SetoidPtr& z, const DistanceTable& d, bool pseudometric = false);

}  // namespace sepset
