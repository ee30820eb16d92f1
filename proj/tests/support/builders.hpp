#pragma once

// Small constructors shared by unit and acceptance tests.

#include <string>
#include <vector>

#include "sepset/complsep.hpp"
#include "sepset/families.hpp"
#include "sepset/induced.hpp"
#include "sepset/kernel.hpp"
#include "sepset/universal.hpp"

namespace sepset::testing {

inline Rat q(const char* text) { return Rat::parse(text); }

inline std::vector<Rat> rats(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

inline SetoidPtr discrete(std::string name, std::vector<std::string> atoms) {
  return FinSetoid::discrete(std::move(name), std::move(atoms));
}

inline SetoidPtr blocks(std::string name, std::vector<std::string> atoms, std::vector<std::vector<std::string>> bs) {
  return FinSetoid::make(std::move(name), std::move(atoms), bs);
}

inline RealFn fn(const SetoidPtr& x, std::vector<Rat> values, std::string label) {
  return make_real_fn(x, std::move(values), std::move(label));
}

inline FnFamily fam(const SetoidPtr& x, std::vector<RealFn> members) { return make_family(x, std::move(members)); }

inline Map map_of(const SetoidPtr& dom, const SetoidPtr& cod, const std::vector<std::string>& images, std::string label = "h") {
  std::vector<std::size_t> ix;
  for (const auto& a : images) ix.push_back(*cod->index_of(a));
  return make_map(dom, cod, std::move(ix), std::move(label));
}

/// Pairs as atom names, row-major over the relation.
inline std::vector<std::pair<std::string, std::string>> named_pairs(const FinSetoid& s, const Relation& r) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : r.pairs()) out.emplace_back(s.atom(a), s.atom(b));
  return out;
}

/// The running example: X = {a, b, c} discrete, f = (0,0,1), g = (0,1,1).
struct Ex {
  SetoidPtr x = discrete("X", {"a", "b", "c"});
  RealFn f = fn(x, rats({0, 0, 1}), "f");
  RealFn g = fn(x, rats({0, 1, 1}), "g");
  FnFamily F = fam(x, {f});
  FnFamily Fp = fam(x, {f, g});
  IneqSet xn = IneqSet{x, induce(x, Fp).neq_induced};
  ComplSep cs = ComplSep{xn, Fp};
  FunctionSpace fs_f = FunctionSpace{x, F};
  FunctionSpace fs_fp = FunctionSpace{x, Fp};
};

inline ComplSep singleton_cs(std::string name = "1") {
  auto s = discrete(std::move(name), {"*"});
  return ComplSep{discrete_ineq(s), fam(s, {fn(s, rats({0}), "z")})};
}

/// A discrete carrier separated by its point indicators.
inline ComplSep indicator_cs(std::string name, std::vector<std::string> atoms) {
  auto s = discrete(std::move(name), atoms);
  std::vector<RealFn> ms;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    std::vector<Rat> v(atoms.size(), Rat(0));
    v[k] = Rat(1);
    ms.push_back(fn(s, v, "χ" + atoms[k]));
  }
  return ComplSep{discrete_ineq(s), fam(s, ms)};
}

}  // namespace sepset::testing
