#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepset/complsep.hpp"
#include "sepset/families.hpp"
#include "sepset/kernel.hpp"

namespace sepset {

/// (X, =_X ; F): a carrier with an extensional family and no inequality.
struct FunctionSpace {
  SetoidPtr carrier;
  FnFamily family;
};

/// Throws CarrierMismatch, or PreconditionViolated naming a member that
/// does not respect =_X.
FunctionSpace make_function_space(SetoidPtr carrier, FnFamily family);
FunctionSpace as_function_space(const ComplSep& cs);

enum class HomKind { Plain, StronglyExtensional, Affine };

struct HomSet {
  std::string src;
  std::string dst;
  HomKind kind = HomKind::Plain;
  std::vector<Map> arrows;  // one per pointwise class
};

/// Same images atom by atom, compared under the codomain equality. Tables
/// may live over different equalities on the same atoms.
bool same_table(const Map& a, const Map& b);
/// Mutual inclusion up to same_table; the failing verdict names an arrow
/// present on one side only.
Verdict hom_sets_equal(const HomSet& a, const HomSet& b);

HomSet plain_homs(const SetoidPtr& x, const SetoidPtr& y, const Bounds& bounds = {});
HomSet strongly_extensional_homs(const IneqSet& x, const IneqSet& y, const Bounds& bounds = {});
HomSet affine_homs(const FunctionSpace& x, const FunctionSpace& y, const Bounds& bounds = {});

/// Verdicts collected over instances and sampled arrows.
struct AdjunctionReport {
  std::vector<Verdict> hom_equality;
  std::vector<Verdict> naturality_left;
  std::vector<Verdict> naturality_right;

  LawReport to_report(std::string law) const;
  bool passed() const { return !to_report({}).any_failed(); }
};

/// εX: the carrier with its own equality, separated by the block
/// indicators χ_B.
ComplSep free_cs(const SetoidPtr& x);

/// εh := h for every h : X → |Y|; strong extensionality, the triangle and
/// uniqueness are checked by enumeration.
LawReport free_universal_check(const SetoidPtr& x, const ComplSep& y, const Bounds& bounds = {});

/// An arrow together with the object it lands in (or starts from).
template <class Obj>
struct Arrow {
  Map map;
  Obj other;
};

struct FreeInstance {
  SetoidPtr x;
  ComplSep y;
  std::vector<Arrow<SetoidPtr>> phis;   // φ : X′ → X, `other` is X′
  std::vector<Arrow<ComplSep>> thetas;  // θ : Y → Y′, `other` is Y′
};

AdjunctionReport free_adjunction_check(const std::vector<FreeInstance>& instances, const Bounds& bounds = {});

struct Rho {
  ComplSep cs;  // ρ_F X
  Map tau;      // τ_X : X → |ρ_F X|
  LawReport checks;
};

/// ρ_F X with ρF given by the tables of F over =_(X,F).
Rho rho(const FunctionSpace& fs);

struct RhoArrow {
  Map arrow;
  LawReport checks;
};

/// ρh := h over ρ_F X. Throws NotAffine naming the violating g ∈ G.
RhoArrow rho_arrow(const Map& h, const FunctionSpace& fs, const ComplSep& y, const Bounds& bounds = {});

struct RhoInstance {
  ComplSep x;         // object of the affine category
  FunctionSpace y;    // function space
  std::vector<Arrow<ComplSep>> phis;        // affine φ : X′ → X
  std::vector<Arrow<FunctionSpace>> thetas;  // affine θ : (Y;G) → (Y′;G′)
};

/// ρ ⊣ Emb through the reflection and Emb ⊣ ρ through hom-set equality,
/// with both naturality rectangles on the sampled arrows.
AdjunctionReport rho_adjunction_check(const std::vector<RhoInstance>& instances, const Bounds& bounds = {});

/// ρ_{F⊗G}(X × Y) against ρ_F X × ρ_G Y.
LawReport rho_product_check(const FunctionSpace& a, const FunctionSpace& b, const Bounds& bounds = {});

struct Dual {
  ComplSep cs;                // carrier F deduplicated, family X̂
  std::vector<RealFn> tables;  // tables[k] is the function named by atom k
  LawReport checks;
};

Dual dual_cs(const FunctionSpace& fs);

/// h* : Y* → X*, g ↦ g ∘ h. Throws NotAffine when some g ∘ h leaves F.
Map dual_arrow(const Map& h, const Dual& x_star, const Dual& y_star);

/// Laws of the dual construction, plus affinity of h* for each sampled h.
LawReport dual_check(const FunctionSpace& fs, const std::vector<Arrow<FunctionSpace>>& arrows = {});

struct HomFamily {
  Family m;
  std::vector<std::vector<Map>> tables;  // tables[i][k] names atom k of μ₀(i)
  LawReport checks;
};

/// M = (μ₀, μ₁) with μ₀(i) = 𝔽(X, λ₀(i)) and μ_ij(φ) = λ_ij ∘ φ.
HomFamily hom_family_M(const IneqSet& x, const Family& lambda, const Bounds& bounds = {});

struct Embedding {
  Map e;  // X → |Π λ₀(i)|
  PiSet pi;
  LawReport checks;
};

/// e^H(x)_i := H_i(x) for H in the Pi-set of M, given as atom indices into
/// the fibers of `m`. Throws NotCompatible.
Embedding embed_eH(const IneqSet& x, const Family& lambda, const HomFamily& m, const DepTable& h,
                   const Bounds& bounds = {});

struct RPower {
  ComplSep dual_index;  // (F, =_F ; X̂), listings kept
  std::vector<Rat> values;
  CSFamily family;      // the constant family ℝ over the dual index
  PiCs power;
  LawReport checks;
};

/// ℝ^F over a finite value universe V (default: values attained by F, or
/// {0} when F attains none). Throws EmptyValueUniverse for an explicit
/// empty V.
RPower r_power(const FnFamily& f, std::optional<std::vector<Rat>> values = std::nullopt, const Bounds& bounds = {});

struct Tychonoff {
  std::optional<Map> e;  // e^{H(F)} into ℝ^F
  LawReport checks;
};

/// Both clauses of the embedding theorem. `x_neq` is the inequality on X
/// used for strong extensionality (default ≠_(X,F)); `supplied` is a
/// candidate affine embedding for clause (ii), otherwise found by search.
Tychonoff tychonoff_check(const FunctionSpace& fs, const std::optional<IneqSet>& x_neq = std::nullopt,
                          const std::optional<Map>& supplied = std::nullopt, const Bounds& bounds = {});

}  // namespace sepset
