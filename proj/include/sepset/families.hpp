#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepset/complsep.hpp"
#include "sepset/kernel.hpp"

namespace sepset {

/// Square table over index atoms, row-major, with optional entries.
template <class T>
class PairTable {
 public:
  PairTable() = default;
  explicit PairTable(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t size() const { return n_; }
  bool has(std::size_t i, std::size_t j) const { return cells_[i * n_ + j].has_value(); }
  const T& at(std::size_t i, std::size_t j) const { return *cells_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, T v) { cells_[i * n_ + j] = std::move(v); }
  void clear(std::size_t i, std::size_t j) { cells_[i * n_ + j].reset(); }

 private:
  std::size_t n_ = 0;
  std::vector<std::optional<T>> cells_;
};

/// Λ = (λ₀, λ₁): fibers per index atom and transport maps λ_ij on the
/// diagonal D(I) = {(i, j) | i =_I j}.
struct Family {
  IneqSet index;
  std::vector<IneqSet> fibers;
  PairTable<Map> transports;

  std::size_t index_size() const { return index.size(); }
  const IneqSet& fiber(std::size_t i) const { return fibers.at(i); }
  const Map& transport(std::size_t i, std::size_t j) const;
};

/// C^X: λ₀(i) = X and λ_ij = id on the diagonal.
Family constant_family(const IneqSet& index, const IneqSet& x);
/// Λ²(X, Y) over the discrete two-point index with full inequality.
Family two_family(const IneqSet& x, const IneqSet& y);
/// The discrete index {0, 1} with 0 ≠ 1.
IneqSet two_index();

/// Identity, triangle and strong extensionality laws, plus absence of
/// off-diagonal transports. Throws MissingTransport for an uncovered
/// diagonal pair.
LawReport validate_family(const Family& fam);

struct SigmaSet {
  IneqSet set;
  std::vector<std::pair<std::size_t, std::size_t>> coords;  // (index atom, fiber atom)
  Map pr1;
  LawReport checks;
};

std::string dep_pair_atom(const Family& fam, std::size_t i, std::size_t x);

/// Dependent pairs with (i,x) = (j,y) :⇔ i =_I j ∧ λ_ij(x) = y and
/// (i,x) ≠ (j,y) :⇔ i ≠_I j ∨ (i =_I j ∧ λ_ij(x) ≠ y).
SigmaSet sigma_set(const Family& fam);

/// Θ_i is a fiber-atom index in λ₀(i), one entry per index atom.
using DepTable = std::vector<std::size_t>;

struct PiSet {
  IneqSet set;
  std::vector<DepTable> tables;  // tables[k] is the dependent function named by atom k
};

/// Θ_j = λ_ij(Θ_i) for every (i, j) ∈ D(I).
bool is_compatible(const Family& fam, const DepTable& theta);
std::string dep_table_name(const Family& fam, const DepTable& theta);

/// One dependent function per pointwise class, compatible on D(I).
PiSet pi_set(const Family& fam, const Bounds& bounds = {});

/// The three implications of the Sigma-set proposition; unmet hypotheses
/// are reported not-applicable.
LawReport sigma_apartness_report(const Family& fam);

/// Family of completely separated sets over (I ; K): fiber families F_i and
/// φ_ij : F_i → F_j on D(I), given as member-index tables.
struct CSFamily {
  Family base;
  FnFamily index_family;
  std::vector<FnFamily> fiber_families;
  PairTable<std::vector<std::size_t>> fn_transports;

  ComplSep fiber_cs(std::size_t i) const { return {base.fibers.at(i), fiber_families.at(i)}; }
};

/// φ_ij as a map between the member sets of F_i and F_j.
Map fn_transport_map(const FnFamily& from, const FnFamily& to, const std::vector<std::size_t>& table, std::string label);

/// Conditions (a), (b), (c) plus the Remark: φ_ij strongly extensional and
/// λ_ij affine.
LawReport validate_cs_family(const CSFamily& s);

/// The constant family of a completely separated set over (I ; K).
CSFamily constant_cs_family(const ComplSep& index, const ComplSep& x);

struct HatFamily {
  CSFamily family;
  LawReport checks;
};

/// Fibers F_i with families {x̂ | x ∈ λ₀(i)}, x̂(f) = f(x); transports φ_ij
/// and θ_ij(x̂) = (λ_ij(x))^.
HatFamily induced_function_family(const CSFamily& s, const Bounds& bounds = {});

struct PiCs {
  ComplSep cs;
  PiSet pi;
  LawReport checks;
};

/// Pi-set with ⨂F_i = {f_i ∘ pr_i}.
PiCs pi_cs(const CSFamily& s, const Bounds& bounds = {});

/// Dependent choices Φ with Φ_i ∈ F_i (member indices) and
/// Φ_j = φ_ij(Φ_i) pointwise on D(I).
std::vector<std::vector<std::size_t>> enumerate_pi_of_families(const CSFamily& s, const Bounds& bounds = {});

/// K̂ ∪ Ĥ against the Sigma inequality over a discrete index. Throws
/// IndexNotDiscrete.
LawReport fcl3_check(const CSFamily& s, const Bounds& bounds = {});

/// Global family of completely separated sets: transports λ*_ij and φ*_ij
/// on every index pair.
struct GlobalFamily {
  IneqSet index;
  FnFamily index_family;
  std::vector<IneqSet> fibers;
  std::vector<FnFamily> fiber_families;
  PairTable<Map> transports;
  PairTable<std::vector<std::size_t>> fn_transports;

  std::size_t index_size() const { return index.size(); }
  const Map& transport(std::size_t i, std::size_t j) const;
  ComplSep index_cs() const { return {index, index_family}; }
};

GlobalFamily constant_global_family(const ComplSep& index, const ComplSep& x);

/// Throws MissingTransport for any uncovered pair.
LawReport validate_global_family(const GlobalFamily& s);

struct SigmaGlobal {
  ComplSep cs;
  std::vector<std::pair<std::size_t, std::size_t>> coords;
  /// Sigma inequality (i ≠_(I,K) j ∨ λ*_ij(x) ≠ y), before comparison.
  Relation sigma_neq;
  LawReport checks;
};

SigmaGlobal sigma_global_cs(const GlobalFamily& s, const Bounds& bounds = {});

/// λ*_ij(Φ_i) ≠ Φ_j ⇒ i ≠_(I,K) j for all i, j. Throws NotInPiSet.
Verdict dep_strongly_extensional(const DepTable& phi, const GlobalFamily& s);

/// Σ* over the Sigma-set and pr₂ as a strongly extensional dependent
/// function over it.
LawReport second_projection_check(const GlobalFamily& s, const Bounds& bounds = {});

}  // namespace sepset
