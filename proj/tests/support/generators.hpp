#pragma once

// Seeded random instances for property sweeps. Every generator is a pure
// function of the engine state, so a fixed seed replays a failing case.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sepset/complsep.hpp"
#include "sepset/families.hpp"
#include "sepset/induced.hpp"
#include "sepset/kernel.hpp"
#include "sepset/universal.hpp"

namespace sepset::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[below(xs.size())];
  }

  /// Rational with |num| ≤ 16 and den ≤ max_den.
  Rat rat(std::int64_t max_den = 16) {
    auto num = static_cast<std::int64_t>(below(33)) - 16;
    auto den = static_cast<std::int64_t>(between(1, static_cast<std::size_t>(max_den)));
    return Rat(num, den);
  }

  /// Atoms "<prefix>0".."<prefix>n-1" with a random partition.
  SetoidPtr setoid(std::size_t min_atoms, std::size_t max_atoms, const std::string& name = "X", const std::string& prefix = "x",
                   double discrete_bias = 0.3) {
    auto n = between(min_atoms, max_atoms);
    std::vector<std::string> atoms;
    for (std::size_t k = 0; k < n; ++k) atoms.push_back(prefix + std::to_string(k));
    if (coin(discrete_bias)) return FinSetoid::discrete(name, atoms);
    std::vector<std::size_t> labels(n);
    auto b = n == 0 ? 1 : between(1, n);
    for (auto& l : labels) l = below(b);
    return FinSetoid::from_labels(name, atoms, labels);
  }

  /// A table constant on blocks, values drawn from `pool` if given.
  RealFn function(const SetoidPtr& x, const std::string& label, const std::vector<Rat>& pool = {}) {
    std::vector<Rat> per_block(x->block_count());
    for (auto& v : per_block) v = pool.empty() ? rat() : pick(pool);
    std::vector<Rat> values(x->size());
    for (std::size_t a = 0; a < x->size(); ++a) values[a] = per_block[x->block_of(a)];
    return make_real_fn(x, std::move(values), label);
  }

  FnFamily family(const SetoidPtr& x, std::size_t max_members, const std::vector<Rat>& pool = {}, const std::string& prefix = "f") {
    FnFamily f{x, {}};
    auto m = between(0, max_members);
    for (std::size_t k = 0; k < m; ++k) f.members.push_back(function(x, prefix + std::to_string(k), pool));
    return f;
  }

  FunctionSpace function_space(std::size_t max_atoms, std::size_t max_members, const std::vector<Rat>& pool = {}) {
    auto x = setoid(1, max_atoms);
    return {x, family(x, max_members, pool)};
  }

  /// A completely separated set: the carrier's equality is the one F induces.
  ComplSep complsep(std::size_t max_atoms, std::size_t max_members, const std::string& name = "X", const std::string& prefix = "x",
                    const std::vector<Rat>& pool = {}) {
    auto raw = setoid(1, max_atoms, name, prefix, 1.0);
    auto f = family(raw, std::max<std::size_t>(1, max_members), pool, prefix + "f");
    auto r = induce(raw, f);
    auto carrier = r.eq_induced;
    FnFamily g{carrier, {}};
    for (const auto& m : f.members) g.members.push_back(retype(m, carrier));
    return {{carrier, r.neq_induced}, g};
  }

  /// Random relation on the atoms, optionally avoiding =_X.
  Relation relation(const FinSetoid& s, double density, bool respect_eq) {
    Relation r(s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b)
        if (!(respect_eq && s.eq(a, b)) && coin(density)) r.set(a, b);
    return r;
  }

  /// Mixture of induced apartness, full discrete inequality and random relations.
  IneqSet ineq(const SetoidPtr& s) {
    switch (below(4)) {
      case 0: return discrete_ineq(s);
      case 1: return {s, induce(s, family(s, 3)).neq_induced};
      case 2: return {s, relation(*s, 0.4, true)};
      default: return {s, relation(*s, 0.3, false)};
    }
  }

  Map map(const SetoidPtr& dom, const SetoidPtr& cod, const std::string& label = "h") {
    std::vector<std::size_t> per_block(dom->block_count());
    for (auto& v : per_block) v = below(cod->size());
    std::vector<std::size_t> image(dom->size());
    for (std::size_t a = 0; a < dom->size(); ++a) image[a] = per_block[dom->block_of(a)];
    return make_map(dom, cod, std::move(image), label);
  }

  /// A valid set family: fibers within one index block are relabelled copies
  /// of the block's first fiber and transports are the relabellings.
  Family set_family(std::size_t max_index, std::size_t max_fiber) {
    auto iset = setoid(1, max_index, "I", "i");
    Family fam{ineq(iset), {}, PairTable<Map>(iset->size())};
    const auto n = iset->size();
    std::vector<std::vector<std::size_t>> perm(n);  // perm[i][x] = atom of fiber i for base atom x
    std::vector<SetoidPtr> base_of_block(iset->block_count());
    std::vector<IneqSet> rep_ineq(iset->block_count());
    fam.fibers.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto b = iset->block_of(i);
      if (!base_of_block[b]) {
        base_of_block[b] = setoid(1, max_fiber, "B", "b");
        rep_ineq[b] = ineq(base_of_block[b]);
      }
      const auto& base = *base_of_block[b];
      std::vector<std::size_t> p(base.size());
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng_);
      perm[i] = p;
      std::vector<std::string> atoms(base.size());
      std::vector<std::size_t> labels(base.size());
      for (std::size_t x = 0; x < base.size(); ++x) {
        atoms[p[x]] = "y" + std::to_string(x) + "." + iset->atom(i);
        labels[p[x]] = base.block_of(x);
      }
      auto fiber = FinSetoid::from_labels("L" + iset->atom(i), atoms, labels);
      Relation neq(base.size());
      for (auto [x, y] : rep_ineq[b].neq.pairs()) neq.set(p[x], p[y]);
      fam.fibers[i] = {fiber, neq};
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!iset->eq(i, j)) continue;
        std::vector<std::size_t> inv(perm[i].size());
        for (std::size_t x = 0; x < inv.size(); ++x) inv[perm[i][x]] = x;
        std::vector<std::size_t> image(inv.size());
        for (std::size_t a = 0; a < inv.size(); ++a) image[a] = perm[j][inv[a]];
        fam.transports.set(i, j, make_map(fam.fibers[i].base, fam.fibers[j].base, image, "λ"));
      }
    return fam;
  }

  /// Completely separated set whose family is closed under a random
  /// permutation of the atoms, so it has non-trivial automorphisms.
  ComplSep symmetric_complsep(std::size_t max_atoms) {
    auto raw = setoid(1, max_atoms, "X", "x", 1.0);
    const auto m = raw->size();
    std::vector<std::size_t> sigma(m);
    std::iota(sigma.begin(), sigma.end(), 0);
    if (coin(0.7)) std::shuffle(sigma.begin(), sigma.end(), rng_);
    std::vector<Rat> pool{Rat(0), Rat(1), Rat(1, 2), Rat(2)};
    FnFamily f{raw, {}};
    auto seeds = between(1, 2);
    for (std::size_t s = 0; s < seeds; ++s) {
      auto g = function(raw, "s", pool);
      // Orbit of g under precomposition with σ.
      while (!f.contains(g)) {
        g.label = "xf" + std::to_string(f.members.size());
        f.members.push_back(g);
        std::vector<Rat> next(m);
        for (std::size_t u = 0; u < m; ++u) next[u] = g(sigma[u]);
        g.values = std::move(next);
      }
    }
    auto r = induce(raw, f);
    FnFamily fam{r.eq_induced, {}};
    for (const auto& mbr : f.members) fam.members.push_back(retype(mbr, r.eq_induced));
    return {{r.eq_induced, r.neq_induced}, fam};
  }

  /// Global family over a completely separated index whose fibers are
  /// relabelled copies of one completely separated set (X ; F). Each index
  /// block b carries an affine automorphism t_b of (X ; F) and the transport
  /// from block b to block c conjugates t_c ∘ t_b⁻¹, so the triangles commute.
  GlobalFamily global_family(std::size_t max_index, std::size_t max_fiber, const Bounds& bounds = {}) {
    auto index = complsep(max_index, 2, "I", "i", {Rat(0), Rat(1), Rat(2)});
    const auto n = index.size();
    auto base = symmetric_complsep(max_fiber);
    const auto& xs = *base.carrier();

    std::vector<Map> autos;
    for (auto& h : enumerate_functions(base.carrier(), base.carrier(), bounds)) {
      std::vector<bool> hit(xs.block_count(), false);
      for (std::size_t u = 0; u < xs.size(); ++u) hit[xs.block_of(h(u))] = true;
      if (std::find(hit.begin(), hit.end(), false) == hit.end() && is_affine(h, base.family, base.family).holds())
        autos.push_back(std::move(h));
    }
    auto inverse = [&](const Map& t) {
      std::vector<std::size_t> image(xs.size());
      for (std::size_t u = 0; u < xs.size(); ++u)
        for (std::size_t v = 0; v < xs.size(); ++v)
          if (xs.eq(t(v), u)) {
            image[u] = v;
            break;
          }
      return make_map(t.dom, t.cod, std::move(image), "t⁻¹");
    };

    const auto& iset = *index.carrier();
    std::vector<Map> t(iset.block_count());
    for (auto& tb : t) tb = pick(autos);
    std::vector<std::vector<Map>> cross(iset.block_count(), std::vector<Map>(iset.block_count()));
    for (std::size_t b = 0; b < iset.block_count(); ++b)
      for (std::size_t c = 0; c < iset.block_count(); ++c)
        cross[b][c] = b == c ? identity_map(base.carrier()) : compose(t[c], inverse(t[b]));

    GlobalFamily g{index.ineq, index.family, {}, {}, PairTable<Map>(n), PairTable<std::vector<std::size_t>>(n)};
    const auto m = base.size();
    std::vector<std::vector<std::size_t>> perm(n), inv(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> p(m);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng_);
      perm[i] = p;
      inv[i].resize(m);
      for (std::size_t x = 0; x < m; ++x) inv[i][p[x]] = x;
      std::vector<std::string> atoms(m);
      std::vector<std::size_t> labels(m);
      for (std::size_t x = 0; x < m; ++x) {
        atoms[p[x]] = base.ineq.atom(x) + "." + iset.atom(i);
        labels[p[x]] = base.carrier()->block_of(x);
      }
      auto fiber = FinSetoid::from_labels("X" + iset.atom(i), atoms, labels);
      Relation neq(m);
      for (auto [x, y] : base.ineq.neq.pairs()) neq.set(p[x], p[y]);
      g.fibers.push_back({fiber, neq});
      FnFamily fi{fiber, {}};
      for (const auto& f : base.family.members) {
        std::vector<Rat> v(m);
        for (std::size_t x = 0; x < m; ++x) v[p[x]] = f(x);
        fi.members.push_back(make_real_fn(fiber, v, f.label + "." + iset.atom(i)));
      }
      g.fiber_families.push_back(std::move(fi));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& a = cross[iset.block_of(i)][iset.block_of(j)];
        std::vector<std::size_t> image(m);
        for (std::size_t u = 0; u < m; ++u) image[u] = perm[j][a(inv[i][u])];
        g.transports.set(i, j, make_map(g.fibers[i].base, g.fibers[j].base, image, "λ*"));
      }
    // φ*_ij(f_i) = f_i ∘ λ*_ji, located among the members of F_j.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> table;
        for (const auto& f : g.fiber_families[i].members) {
          auto c = compose(f, g.transports.at(j, i));
          table.push_back(*g.fiber_families[j].find(c));
        }
        g.fn_transports.set(i, j, std::move(table));
      }
    return g;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace sepset::testing
