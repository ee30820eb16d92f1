#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepset/error.hpp"
#include "sepset/rat.hpp"
#include "sepset/verdict.hpp"

namespace sepset {

/// Enumeration guards: quantifiers are evaluated by exhaustion, so every
/// construction that enumerates tables is bounded.
struct Bounds {
  std::size_t max_atoms = 12;
  std::size_t max_enum = 10000;
};

/// Finite carrier of opaque atoms with an equality given by a partition.
/// Immutable once built; shared through SetoidPtr.
class FinSetoid {
 public:
  /// Blocks must cover `atoms` exactly once each. An empty block list means
  /// the discrete partition.
  static std::shared_ptr<const FinSetoid> make(std::string name, std::vector<std::string> atoms,
                                               const std::vector<std::vector<std::string>>& blocks);
  static std::shared_ptr<const FinSetoid> discrete(std::string name, std::vector<std::string> atoms);
  /// `block_of[i]` is an arbitrary label for atom i's block; labels are
  /// renumbered by first occurrence.
  static std::shared_ptr<const FinSetoid> from_labels(std::string name, std::vector<std::string> atoms,
                                                      const std::vector<std::size_t>& block_of);

  const std::string& name() const { return name_; }
  std::size_t size() const { return atoms_.size(); }
  const std::string& atom(std::size_t i) const { return atoms_.at(i); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  std::optional<std::size_t> index_of(std::string_view atom) const;

  bool eq(std::size_t i, std::size_t j) const { return block_of_[i] == block_of_[j]; }
  std::size_t block_of(std::size_t i) const { return block_of_[i]; }
  std::size_t block_count() const { return block_count_; }
  /// Atom indices per block, blocks ordered by first atom.
  std::vector<std::vector<std::size_t>> blocks() const;
  /// First atom of each block.
  std::vector<std::size_t> representatives() const;
  bool is_discrete() const { return block_count_ == atoms_.size(); }

  /// Same atoms in the same order with the same partition; names ignored.
  friend bool operator==(const FinSetoid& a, const FinSetoid& b) {
    return a.atoms_ == b.atoms_ && a.block_of_ == b.block_of_;
  }

 private:
  FinSetoid() = default;

  std::string name_;
  std::vector<std::string> atoms_;
  std::vector<std::size_t> block_of_;
  std::size_t block_count_ = 0;
};

using SetoidPtr = std::shared_ptr<const FinSetoid>;

bool same_setoid(const SetoidPtr& a, const SetoidPtr& b);

/// Same atoms, equality replaced by `block_of` labels.
SetoidPtr with_partition(const FinSetoid& s, const std::vector<std::size_t>& block_of, std::string name = {});

/// Binary relation on atom indices 0..n-1, stored densely.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v = true) { bits_[i * n_ + j] = v ? 1 : 0; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<char> bits_;
};

/// First pair in row-major order where `sub` holds but `super` does not.
std::optional<std::pair<std::size_t, std::size_t>> first_outside(const Relation& sub, const Relation& super);

/// A set with an inequality. The relation is stored as given; no axiom is
/// assumed until check_ineq_axioms says so.
struct IneqSet {
  SetoidPtr base;
  Relation neq;

  std::size_t size() const { return base->size(); }
  const std::string& atom(std::size_t i) const { return base->atom(i); }
  bool eq(std::size_t i, std::size_t j) const { return base->eq(i, j); }
  bool apart(std::size_t i, std::size_t j) const { return neq(i, j); }
};

IneqSet make_ineq(SetoidPtr base, const std::vector<std::pair<std::string, std::string>>& neq_pairs);
/// x ≠ y exactly when x, y lie in distinct blocks.
IneqSet discrete_ineq(SetoidPtr base);
IneqSet empty_ineq(SetoidPtr base);

/// Real-valued table on a finite setoid.
struct RealFn {
  SetoidPtr dom;
  std::vector<Rat> values;
  std::string label;

  const Rat& operator()(std::size_t x) const { return values[x]; }
};

/// Setoid-valued table dom → cod, by atom index.
struct Map {
  SetoidPtr dom;
  SetoidPtr cod;
  std::vector<std::size_t> image;
  std::string label;

  std::size_t operator()(std::size_t x) const { return image[x]; }
};

RealFn make_real_fn(SetoidPtr dom, std::vector<Rat> values, std::string label = {});
Map make_map(SetoidPtr dom, SetoidPtr cod, std::vector<std::size_t> image, std::string label = {});
Map identity_map(const SetoidPtr& s);
/// g ∘ h. Requires h.cod to equal g.dom.
Map compose(const Map& g, const Map& h);
RealFn compose(const RealFn& g, const Map& h);
/// Pointwise equality; Map images compared under the codomain equality.
bool pointwise_equal(const Map& a, const Map& b);
bool pointwise_equal(const RealFn& a, const RealFn& b);
/// Same tables re-read over another domain with the same atoms.
Map retype(const Map& m, SetoidPtr dom, SetoidPtr cod);
RealFn retype(const RealFn& f, SetoidPtr dom);
/// "[v0,v1,...]" in domain order, used as an atom name for tables.
std::string table_name(const Map& m);
std::string table_name(const RealFn& f);

/// Finite extensional subset of the real-valued functions on a carrier.
/// Membership is pointwise equality against some listed member.
struct FnFamily {
  SetoidPtr carrier;
  std::vector<RealFn> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  std::optional<std::size_t> find(const RealFn& f) const;
  bool contains(const RealFn& f) const { return find(f).has_value(); }
  /// Members with pointwise duplicates removed, first listing kept.
  FnFamily deduplicated() const;
};

FnFamily make_family(SetoidPtr carrier, std::vector<RealFn> members);

/// The listed members as a set with the pointwise equality of 𝔽(X) and
/// f ≠ g :⇔ ∃x f(x) ≠_ℝ g(x). Atom k names member k.
IneqSet members_as_ineq_set(const FnFamily& f, std::string name = {});

/// Verdicts for Ineq1..Ineq6, each evaluated by exhaustion over atoms.
struct AxiomReport {
  std::array<Verdict, 6> axioms;

  const Verdict& ineq(int k) const { return axioms.at(static_cast<std::size_t>(k - 1)); }
  bool holds(int k) const { return ineq(k).holds(); }
  bool is_apartness() const { return holds(4) && holds(5); }
  bool is_tight() const { return holds(3); }
  bool is_discrete() const { return holds(6); }
  bool is_extensional() const { return holds(2); }

  LawReport to_report() const;
};

/// Throws MissingEntry when the table does not cover its domain; otherwise
/// checks x =_dom y ⇒ f(x) = f(y).
Verdict validate_function(const RealFn& f);
Verdict validate_function(const Map& f);

AxiomReport check_ineq_axioms(const IneqSet& s);

/// f(x) ≠_Y f(y) ⇒ x ≠_X y on every pair. Throws DomainMismatch when f
/// does not go X → Y.
Verdict is_strongly_extensional(const Map& f, const IneqSet& x, const IneqSet& y);
/// Same, with the codomain ℝ under |a − b| > 0.
Verdict is_strongly_extensional(const RealFn& f, const IneqSet& x);

struct ProductIneq {
  IneqSet set;
  std::vector<std::pair<std::size_t, std::size_t>> coords;
  Map pr_first;
  Map pr_second;
};

SetoidPtr product_setoid(const FinSetoid& x, const FinSetoid& y, std::vector<std::pair<std::size_t, std::size_t>>* coords = nullptr);
std::string pair_atom(std::string_view a, std::string_view b);

ProductIneq canonical_product_ineq(const IneqSet& x, const IneqSet& y, const Bounds& bounds = {});

struct FunctionSetIneq {
  IneqSet set;
  std::vector<Map> tables;  // tables[k] is the function named by atom k
};

/// Carrier: one table per pointwise class of X → Y.base; f ≠ g iff some
/// x has f(x) ≠_Y g(x).
FunctionSetIneq canonical_funspace_ineq(const SetoidPtr& x, const IneqSet& y, const Bounds& bounds = {});

/// Pulls equality and inequality back along i_A : A → X.
IneqSet canonical_subset_ineq(const IneqSet& x, const Map& i_a);

/// One representative per pointwise-equality class of functions X → Y;
/// count = |Y-blocks|^|X-blocks|. Throws CarrierTooLarge above the bound.
std::vector<Map> enumerate_functions(const SetoidPtr& x, const SetoidPtr& y, const Bounds& bounds = {});

/// Checked |base|^|exp| capped at cap+1.
std::size_t bounded_power(std::size_t base, std::size_t exp, std::size_t cap);

}  // namespace sepset
