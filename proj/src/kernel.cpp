#include "sepset/kernel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sepset {

// ---------------------------------------------------------------- FinSetoid

std::shared_ptr<const FinSetoid> FinSetoid::from_labels(std::string name, std::vector<std::string> atoms,
                                                        const std::vector<std::size_t>& block_of) {
  if (block_of.size() != atoms.size()) {
    throw Error(ErrorCode::PreconditionViolated, "partition labels do not match atom count");
  }
  std::set<std::string> seen;
  for (const auto& a : atoms) {
    if (!seen.insert(a).second) {
      throw Error(ErrorCode::DuplicateName, "atom '" + a + "' listed twice in set '" + name + "'");
    }
  }
  auto s = std::shared_ptr<FinSetoid>(new FinSetoid());
  s->name_ = std::move(name);
  s->atoms_ = std::move(atoms);
  std::map<std::size_t, std::size_t> renumber;
  s->block_of_.reserve(block_of.size());
  for (auto label : block_of) {
    auto [it, inserted] = renumber.emplace(label, renumber.size());
    s->block_of_.push_back(it->second);
  }
  s->block_count_ = renumber.size();
  return s;
}

std::shared_ptr<const FinSetoid> FinSetoid::make(std::string name, std::vector<std::string> atoms,
                                                 const std::vector<std::vector<std::string>>& blocks) {
  if (blocks.empty()) return discrete(std::move(name), std::move(atoms));
  std::map<std::string, std::size_t> label;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw Error(ErrorCode::PreconditionViolated, "empty block in partition of '" + name + "'");
    }
    for (const auto& a : blocks[b]) {
      if (!label.emplace(a, b).second) {
        throw Error(ErrorCode::PreconditionViolated, "atom '" + a + "' appears in two blocks of '" + name + "'");
      }
    }
  }
  std::vector<std::size_t> block_of;
  for (const auto& a : atoms) {
    auto it = label.find(a);
    if (it == label.end()) {
      throw Error(ErrorCode::PreconditionViolated, "atom '" + a + "' of '" + name + "' is in no block");
    }
    block_of.push_back(it->second);
  }
  if (label.size() != atoms.size()) {
    for (const auto& [a, b] : label) {
      if (std::find(atoms.begin(), atoms.end(), a) == atoms.end()) {
        throw Error(ErrorCode::PreconditionViolated, "block atom '" + a + "' is not an atom of '" + name + "'");
      }
    }
  }
  return from_labels(std::move(name), std::move(atoms), block_of);
}

std::shared_ptr<const FinSetoid> FinSetoid::discrete(std::string name, std::vector<std::string> atoms) {
  std::vector<std::size_t> labels(atoms.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i;
  return from_labels(std::move(name), std::move(atoms), labels);
}

std::optional<std::size_t> FinSetoid::index_of(std::string_view atom) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == atom) return i;
  }
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> FinSetoid::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count_);
  for (std::size_t i = 0; i < atoms_.size(); ++i) out[block_of_[i]].push_back(i);
  return out;
}

std::vector<std::size_t> FinSetoid::representatives() const {
  std::vector<std::size_t> reps;
  for (const auto& b : blocks()) reps.push_back(b.front());
  return reps;
}

bool same_setoid(const SetoidPtr& a, const SetoidPtr& b) { return a == b || (a && b && *a == *b); }

SetoidPtr with_partition(const FinSetoid& s, const std::vector<std::size_t>& block_of, std::string name) {
  return FinSetoid::from_labels(name.empty() ? s.name() : std::move(name), s.atoms(), block_of);
}

// ---------------------------------------------------------------- Relation

std::size_t Relation::count() const {
  std::size_t c = 0;
  for (char b : bits_) c += b != 0;
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j)) out.emplace_back(i, j);
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> first_outside(const Relation& sub, const Relation& super) {
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t j = 0; j < sub.size(); ++j)
      if (sub(i, j) && !super(i, j)) return std::pair{i, j};
  return std::nullopt;
}

IneqSet make_ineq(SetoidPtr base, const std::vector<std::pair<std::string, std::string>>& neq_pairs) {
  Relation r(base->size());
  for (const auto& [a, b] : neq_pairs) {
    auto i = base->index_of(a), j = base->index_of(b);
    if (!i || !j) {
      throw Error(ErrorCode::PreconditionViolated,
                  "pair (" + a + "," + b + ") mentions an atom outside '" + base->name() + "'");
    }
    r.set(*i, *j);
  }
  return {std::move(base), std::move(r)};
}

IneqSet discrete_ineq(SetoidPtr base) {
  Relation r(base->size());
  for (std::size_t i = 0; i < base->size(); ++i)
    for (std::size_t j = 0; j < base->size(); ++j)
      if (!base->eq(i, j)) r.set(i, j);
  return {std::move(base), std::move(r)};
}

IneqSet empty_ineq(SetoidPtr base) {
  Relation r(base->size());
  return {std::move(base), std::move(r)};
}

// ---------------------------------------------------------------- functions

RealFn make_real_fn(SetoidPtr dom, std::vector<Rat> values, std::string label) {
  if (values.size() != dom->size()) {
    throw Error(ErrorCode::MissingEntry, "function '" + label + "' has " + std::to_string(values.size()) +
                                             " entries for " + std::to_string(dom->size()) + " atoms");
  }
  return {std::move(dom), std::move(values), std::move(label)};
}

Map make_map(SetoidPtr dom, SetoidPtr cod, std::vector<std::size_t> image, std::string label) {
  if (image.size() != dom->size()) {
    throw Error(ErrorCode::MissingEntry, "map '" + label + "' has " + std::to_string(image.size()) +
                                             " entries for " + std::to_string(dom->size()) + " atoms");
  }
  for (auto y : image) {
    if (y >= cod->size()) throw Error(ErrorCode::DomainMismatch, "map '" + label + "' leaves its codomain");
  }
  return {std::move(dom), std::move(cod), std::move(image), std::move(label)};
}

Map identity_map(const SetoidPtr& s) {
  std::vector<std::size_t> image(s->size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  return {s, s, std::move(image), "id_" + s->name()};
}

Map compose(const Map& g, const Map& h) {
  if (!same_setoid(h.cod, g.dom)) {
    throw Error(ErrorCode::DomainMismatch, "cannot compose " + g.label + " after " + h.label);
  }
  std::vector<std::size_t> image(h.image.size());
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = g.image[h.image[x]];
  return {h.dom, g.cod, std::move(image), g.label + "∘" + h.label};
}

RealFn compose(const RealFn& g, const Map& h) {
  if (!same_setoid(h.cod, g.dom)) {
    throw Error(ErrorCode::DomainMismatch, "cannot compose " + g.label + " after " + h.label);
  }
  std::vector<Rat> values(h.image.size());
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = g.values[h.image[x]];
  return {h.dom, std::move(values), g.label + "∘" + h.label};
}

bool pointwise_equal(const Map& a, const Map& b) {
  if (a.image.size() != b.image.size()) return false;
  for (std::size_t x = 0; x < a.image.size(); ++x) {
    if (!a.cod->eq(a.image[x], b.image[x])) return false;
  }
  return true;
}

bool pointwise_equal(const RealFn& a, const RealFn& b) { return a.values == b.values; }

Map retype(const Map& m, SetoidPtr dom, SetoidPtr cod) {
  if (dom->atoms() != m.dom->atoms() || cod->atoms() != m.cod->atoms()) {
    throw Error(ErrorCode::DomainMismatch, "retyping '" + m.label + "' onto different atoms");
  }
  return {std::move(dom), std::move(cod), m.image, m.label};
}

RealFn retype(const RealFn& f, SetoidPtr dom) {
  if (dom->atoms() != f.dom->atoms()) {
    throw Error(ErrorCode::DomainMismatch, "retyping '" + f.label + "' onto different atoms");
  }
  return {std::move(dom), f.values, f.label};
}

std::string table_name(const Map& m) {
  std::string s = "[";
  for (std::size_t x = 0; x < m.image.size(); ++x) {
    if (x) s += ",";
    s += m.cod->atom(m.image[x]);
  }
  return s + "]";
}

std::string table_name(const RealFn& f) {
  std::string s = "[";
  for (std::size_t x = 0; x < f.values.size(); ++x) {
    if (x) s += ",";
    s += f.values[x].str();
  }
  return s + "]";
}

std::optional<std::size_t> FnFamily::find(const RealFn& f) const {
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (pointwise_equal(members[k], f)) return k;
  }
  return std::nullopt;
}

FnFamily FnFamily::deduplicated() const {
  FnFamily out{carrier, {}};
  for (const auto& m : members) {
    if (!out.contains(m)) out.members.push_back(m);
  }
  return out;
}

FnFamily make_family(SetoidPtr carrier, std::vector<RealFn> members) {
  for (const auto& m : members) {
    if (!same_setoid(m.dom, carrier)) {
      throw Error(ErrorCode::CarrierMismatch, "member '" + m.label + "' lives on another carrier than '" +
                                                  carrier->name() + "'");
    }
  }
  return {std::move(carrier), std::move(members)};
}

IneqSet members_as_ineq_set(const FnFamily& f, std::string name) {
  std::vector<std::string> atoms;
  std::vector<std::size_t> labels;
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::string a = f.members[k].label.empty() ? "m" + std::to_string(k) : f.members[k].label;
    if (std::find(atoms.begin(), atoms.end(), a) != atoms.end()) a += "#" + std::to_string(k);
    atoms.push_back(std::move(a));
    std::size_t label = k;
    for (std::size_t j = 0; j < k; ++j)
      if (pointwise_equal(f.members[j], f.members[k])) {
        label = labels[j];
        break;
      }
    labels.push_back(label);
  }
  auto base = FinSetoid::from_labels(name.empty() ? "F(" + f.carrier->name() + ")" : std::move(name), std::move(atoms), labels);
  Relation neq(f.size());
  for (std::size_t p = 0; p < f.size(); ++p)
    for (std::size_t q = 0; q < f.size(); ++q)
      for (std::size_t x = 0; x < f.carrier->size(); ++x)
        if (rat_apart(f.members[p](x), f.members[q](x)).apart) {
          neq.set(p, q);
          break;
        }
  return {std::move(base), std::move(neq)};
}

// ---------------------------------------------------------------- checks

Verdict validate_function(const RealFn& f) {
  const auto& d = *f.dom;
  if (f.values.size() != d.size()) {
    throw Error(ErrorCode::MissingEntry, "function '" + f.label + "' is not total on '" + d.name() + "'");
  }
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t y = x + 1; y < d.size(); ++y)
      if (d.eq(x, y) && f.values[x] != f.values[y]) {
        return Verdict::fail(Witness::violation({d.atom(x), d.atom(y)},
                                                "equal atoms sent to " + f.values[x].str() + " and " +
                                                    f.values[y].str()));
      }
  return Verdict::pass();
}

Verdict validate_function(const Map& f) {
  const auto& d = *f.dom;
  if (f.image.size() != d.size()) {
    throw Error(ErrorCode::MissingEntry, "map '" + f.label + "' is not total on '" + d.name() + "'");
  }
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t y = x + 1; y < d.size(); ++y)
      if (d.eq(x, y) && !f.cod->eq(f.image[x], f.image[y])) {
        return Verdict::fail(Witness::violation({d.atom(x), d.atom(y)},
                                                "equal atoms sent to distinct " + f.cod->atom(f.image[x]) +
                                                    " and " + f.cod->atom(f.image[y])));
      }
  return Verdict::pass();
}

AxiomReport check_ineq_axioms(const IneqSet& s) {
  const std::size_t n = s.size();
  auto at = [&](std::initializer_list<std::size_t> idx) {
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(s.atom(i));
    return out;
  };
  AxiomReport r;
  std::array<std::optional<Witness>, 6> bad;

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      bool eq = s.eq(x, y), ne = s.apart(x, y);
      if (eq && ne && !bad[0]) bad[0] = Witness::violation(at({x, y}), "x = y and x ≠ y");
      if (!ne && !eq && !bad[2]) bad[2] = Witness::violation(at({x, y}), "¬(x ≠ y) but x, y in distinct blocks");
      if (ne && !s.apart(y, x) && !bad[3]) bad[3] = Witness::violation(at({x, y}), "x ≠ y but not y ≠ x");
      if (!eq && !ne && !bad[5]) bad[5] = Witness::violation(at({x, y}), "neither x = y nor x ≠ y");
      if (ne) {
        for (std::size_t z = 0; z < n && !bad[4]; ++z) {
          if (!s.apart(z, x) && !s.apart(z, y)) {
            bad[4] = Witness::violation(at({x, y, z}), "x ≠ y but z is apart from neither");
          }
        }
        if (!bad[1]) {
          for (std::size_t x2 = 0; x2 < n && !bad[1]; ++x2) {
            if (!s.eq(x, x2)) continue;
            for (std::size_t y2 = 0; y2 < n; ++y2) {
              if (s.eq(y, y2) && !s.apart(x2, y2)) {
                bad[1] = Witness::violation(at({x, x2, y, y2}), "x ≠ y, x = x', y = y' but not x' ≠ y'");
                break;
              }
            }
          }
        }
      }
    }
  }
  for (std::size_t k = 0; k < 6; ++k) {
    r.axioms[k] = bad[k] ? Verdict::fail(*bad[k]) : Verdict::pass();
  }
  return r;
}

LawReport AxiomReport::to_report() const {
  LawReport rep{"ineq-axioms", {}};
  for (int k = 1; k <= 6; ++k) rep.add("Ineq" + std::to_string(k), ineq(k));
  auto flag = [](bool b) { return b ? Verdict::pass() : Verdict::not_applicable("does not hold"); };
  rep.add("apartness", flag(is_apartness()));
  rep.add("tight", flag(is_tight()));
  rep.add("discrete", flag(is_discrete()));
  rep.add("extensional", flag(is_extensional()));
  return rep;
}

Verdict is_strongly_extensional(const Map& f, const IneqSet& x, const IneqSet& y) {
  if (!same_setoid(f.dom, x.base) || !same_setoid(f.cod, y.base)) {
    throw Error(ErrorCode::DomainMismatch,
                "'" + f.label + "' does not go from '" + x.base->name() + "' to '" + y.base->name() + "'");
  }
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (y.apart(f(a), f(b)) && !x.apart(a, b)) {
        return Verdict::fail(Witness::violation(
            {x.atom(a), x.atom(b)}, "images " + y.atom(f(a)) + ", " + y.atom(f(b)) + " apart but arguments not"));
      }
  return Verdict::pass();
}

Verdict is_strongly_extensional(const RealFn& f, const IneqSet& x) {
  if (!same_setoid(f.dom, x.base)) {
    throw Error(ErrorCode::DomainMismatch, "'" + f.label + "' is not defined on '" + x.base->name() + "'");
  }
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (rat_apart(f(a), f(b)).apart && !x.apart(a, b)) {
        return Verdict::fail(Witness::violation(
            {x.atom(a), x.atom(b)}, "values " + f(a).str() + ", " + f(b).str() + " apart but arguments not"));
      }
  return Verdict::pass();
}

// ---------------------------------------------------------------- constructions

std::size_t bounded_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    if (base == 0) return 0;
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

std::string pair_atom(std::string_view a, std::string_view b) {
  return "(" + std::string(a) + "," + std::string(b) + ")";
}

SetoidPtr product_setoid(const FinSetoid& x, const FinSetoid& y,
                         std::vector<std::pair<std::size_t, std::size_t>>* coords) {
  std::vector<std::string> atoms;
  std::vector<std::size_t> labels;
  if (coords) coords->clear();
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b) {
      atoms.push_back(pair_atom(x.atom(a), y.atom(b)));
      labels.push_back(x.block_of(a) * y.block_count() + y.block_of(b));
      if (coords) coords->emplace_back(a, b);
    }
  return FinSetoid::from_labels(x.name() + "×" + y.name(), std::move(atoms), labels);
}

ProductIneq canonical_product_ineq(const IneqSet& x, const IneqSet& y, const Bounds& bounds) {
  if (x.size() * y.size() > bounds.max_enum) {
    throw Error(ErrorCode::CarrierTooLarge, "product carrier of " + std::to_string(x.size() * y.size()) + " atoms");
  }
  ProductIneq out;
  auto base = product_setoid(*x.base, *y.base, &out.coords);
  Relation neq(base->size());
  for (std::size_t p = 0; p < base->size(); ++p)
    for (std::size_t q = 0; q < base->size(); ++q) {
      auto [a, b] = out.coords[p];
      auto [a2, b2] = out.coords[q];
      if (x.apart(a, a2) || y.apart(b, b2)) neq.set(p, q);
    }
  std::vector<std::size_t> first, second;
  for (auto [a, b] : out.coords) {
    first.push_back(a);
    second.push_back(b);
  }
  out.pr_first = make_map(base, x.base, std::move(first), "pr_" + x.base->name());
  out.pr_second = make_map(base, y.base, std::move(second), "pr_" + y.base->name());
  out.set = {std::move(base), std::move(neq)};
  return out;
}

std::vector<Map> enumerate_functions(const SetoidPtr& x, const SetoidPtr& y, const Bounds& bounds) {
  const auto xb = x->blocks();
  const auto yreps = y->representatives();
  std::size_t count = bounded_power(yreps.size(), xb.size(), bounds.max_enum);
  if (count > bounds.max_enum) {
    throw Error(ErrorCode::CarrierTooLarge, std::to_string(yreps.size()) + "^" + std::to_string(xb.size()) +
                                                " tables from '" + x->name() + "' to '" + y->name() +
                                                "' exceed the bound " + std::to_string(bounds.max_enum));
  }
  std::vector<Map> out;
  out.reserve(count);
  std::vector<std::size_t> choice(xb.size(), 0);  // odometer over block images
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<std::size_t> image(x->size());
    for (std::size_t b = 0; b < xb.size(); ++b)
      for (auto a : xb[b]) image[a] = yreps[choice[b]];
    Map m{x, y, std::move(image), {}};
    m.label = table_name(m);
    out.push_back(std::move(m));
    for (std::size_t b = xb.size(); b-- > 0;) {
      if (++choice[b] < yreps.size()) break;
      choice[b] = 0;
    }
  }
  return out;
}

FunctionSetIneq canonical_funspace_ineq(const SetoidPtr& x, const IneqSet& y, const Bounds& bounds) {
  FunctionSetIneq out;
  out.tables = enumerate_functions(x, y.base, bounds);
  std::vector<std::string> atoms;
  for (const auto& t : out.tables) atoms.push_back(t.label);
  // Representatives are pairwise non-equal, so the pointwise equality on the
  // carrier is discrete.
  auto base = FinSetoid::discrete("F(" + x->name() + "," + y.base->name() + ")", std::move(atoms));
  Relation neq(base->size());
  for (std::size_t f = 0; f < out.tables.size(); ++f)
    for (std::size_t g = 0; g < out.tables.size(); ++g)
      for (std::size_t a = 0; a < x->size(); ++a)
        if (y.apart(out.tables[f](a), out.tables[g](a))) {
          neq.set(f, g);
          break;
        }
  for (auto& t : out.tables) t.label = base->atom(&t - out.tables.data());
  out.set = {std::move(base), std::move(neq)};
  return out;
}

IneqSet canonical_subset_ineq(const IneqSet& x, const Map& i_a) {
  if (!same_setoid(i_a.cod, x.base)) {
    throw Error(ErrorCode::DomainMismatch, "embedding '" + i_a.label + "' does not land in '" + x.base->name() + "'");
  }
  if (auto v = validate_function(i_a); v.failed()) {
    throw Error(ErrorCode::PreconditionViolated, "embedding '" + i_a.label + "' does not respect equality");
  }
  const auto& a = *i_a.dom;
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = p + 1; q < a.size(); ++q)
      if (!a.eq(p, q) && x.eq(i_a(p), i_a(q))) {
        throw Error(ErrorCode::NotInjective, "'" + a.atom(p) + "' and '" + a.atom(q) +
                                                 "' are distinct in '" + a.name() + "' but have equal images");
      }
  Relation neq(a.size());
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = 0; q < a.size(); ++q)
      if (x.apart(i_a(p), i_a(q))) neq.set(p, q);
  return {i_a.dom, std::move(neq)};
}

}  // namespace sepset
