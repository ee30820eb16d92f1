#include "sepset/spec.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "sepset/laws.hpp"

namespace sepset::spec {

std::string_view to_string(SectionKind k) {
  switch (k) {
    case SectionKind::Settings: return "settings";
    case SectionKind::Set: return "set";
    case SectionKind::Ineq: return "ineq";
    case SectionKind::Fn: return "fn";
    case SectionKind::Family: return "family";
    case SectionKind::Check: return "check";
  }
  return "?";
}

const Entry* Section::find(std::string_view key) const {
  for (const auto& e : entries)
    if (e.key.size() == 1 && e.key[0] == key) return &e;
  return nullptr;
}

std::size_t SpecDocument::count(SectionKind k) const {
  return static_cast<std::size_t>(std::count_if(sections.begin(), sections.end(), [&](const Section& s) { return s.kind == k; }));
}

namespace {

std::string position_message(std::size_t line, std::size_t col, const std::string& token, const std::string& message) {
  std::string s = std::to_string(line) + ":" + std::to_string(col) + ": " + message;
  if (!token.empty()) s += " (at '" + token + "')";
  return s;
}

// Messages rethrown from nested errors already start with "<Code>: ".
std::string strip_code(const std::string& message) {
  auto colon = message.find(": ");
  if (colon == std::string::npos) return message;
  auto head = message.substr(0, colon);
  for (int c = 0; c <= static_cast<int>(ErrorCode::UnknownLawId); ++c)
    if (to_string(static_cast<ErrorCode>(c)) == head) return message.substr(colon + 2);
  return message;
}

}  // namespace

SpecError::SpecError(ErrorCode code, std::size_t line, std::size_t col, std::string token, std::string expected,
                     const std::string& message)
    : Error(code, position_message(line, col, token, strip_code(message))),
      line_(line),
      col_(col),
      token_(std::move(token)),
      expected_(std::move(expected)),
      detail_(strip_code(message)) {}

const Family* Model::set_family(const std::string& name) const {
  if (auto it = set_families.find(name); it != set_families.end()) return &it->second;
  if (auto it = cs_families.find(name); it != cs_families.end()) return &it->second.base;
  return nullptr;
}

// ---------------------------------------------------------------- lexing

namespace {

constexpr std::string_view kPunct = "{}(),=";

bool is_punct(std::string_view t) { return t.size() == 1 && kPunct.find(t[0]) != std::string_view::npos; }

struct Token {
  std::string text;
  std::size_t col;
};

/// Length of the UTF-8 sequence starting at s[i], or 0 if malformed.
std::size_t utf8_length(std::string_view s, std::size_t i) {
  auto c = static_cast<unsigned char>(s[i]);
  std::size_t n = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 0;
  if (n == 0 || i + n > s.size()) return 0;
  for (std::size_t k = 1; k < n; ++k)
    if ((static_cast<unsigned char>(s[i + k]) >> 6) != 0x2) return 0;
  return n;
}

std::vector<Token> lex_line(std::string_view line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0, col = 1;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t') {
      ++i, ++col;
      continue;
    }
    if (kPunct.find(c) != std::string_view::npos) {
      out.push_back({std::string(1, c), col});
      ++i, ++col;
      continue;
    }
    Token t{{}, col};
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#' &&
           kPunct.find(line[i]) == std::string_view::npos) {
      auto n = utf8_length(line, i);
      if (n == 0) throw SpecError(ErrorCode::ParseError, lineno, col, {}, "UTF-8", "input is not valid UTF-8");
      t.text.append(line.substr(i, n));
      i += n, ++col;
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::optional<SectionKind> section_kind(std::string_view w) {
  for (auto k : {SectionKind::Settings, SectionKind::Set, SectionKind::Ineq, SectionKind::Fn, SectionKind::Family,
                 SectionKind::Check})
    if (to_string(k) == w) return k;
  return std::nullopt;
}

}  // namespace

SpecDocument parse_syntax(std::string_view text) {
  SpecDocument doc;
  std::optional<Section> open;
  std::size_t lineno = 0, start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    auto line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    auto toks = lex_line(line, lineno);
    if (!toks.empty()) {
      if (!open) {
        auto kind = section_kind(toks[0].text);
        if (!kind)
          throw SpecError(ErrorCode::ParseError, lineno, toks[0].col, toks[0].text, "settings, set, ineq, fn, family or check",
                          "expected a section keyword");
        Section s{*kind, {}, {}, lineno, toks[0].col};
        std::size_t next = 1;
        if (*kind != SectionKind::Settings) {
          if (toks.size() < 2 || is_punct(toks[1].text))
            throw SpecError(ErrorCode::ParseError, lineno, toks.size() < 2 ? toks[0].col + toks[0].text.size() : toks[1].col,
                            toks.size() < 2 ? "" : toks[1].text, "a name", "expected a name after '" + toks[0].text + "'");
          s.name = toks[1].text;
          next = 2;
        }
        if (toks.size() > next)
          throw SpecError(ErrorCode::ParseError, lineno, toks[next].col, toks[next].text, "end of line", "unexpected token");
        open = std::move(s);
      } else if (toks.size() == 1 && toks[0].text == "end") {
        doc.sections.push_back(std::move(*open));
        open.reset();
      } else {
        Entry e;
        e.line = lineno;
        e.col = toks[0].col;
        std::size_t k = 0;
        for (; k < toks.size() && toks[k].text != "="; ++k) {
          if (is_punct(toks[k].text))
            throw SpecError(ErrorCode::ParseError, lineno, toks[k].col, toks[k].text, "a key word", "punctuation in a key");
          e.key.push_back(toks[k].text);
        }
        if (k == toks.size())
          throw SpecError(ErrorCode::ParseError, lineno, toks.back().col + toks.back().text.size(), {}, "=",
                          "expected '=' after the key");
        if (e.key.empty()) throw SpecError(ErrorCode::ParseError, lineno, toks[k].col, "=", "a key", "entry has no key");
        for (++k; k < toks.size(); ++k) {
          if (toks[k].text == "=")
            throw SpecError(ErrorCode::ParseError, lineno, toks[k].col, "=", "a value", "second '=' in one entry");
          e.value.push_back(toks[k].text);
          e.value_cols.push_back(toks[k].col);
        }
        open->entries.push_back(std::move(e));
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  if (open)
    throw SpecError(ErrorCode::ParseError, lineno, 1, {}, "end",
                    "section '" + std::string(to_string(open->kind)) + " " + open->name + "' is not closed");
  return doc;
}

SpecDocument parse_spec(std::string_view text) {
  auto doc = parse_syntax(text);
  resolve(doc);
  return doc;
}

SpecDocument parse_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError(ErrorCode::ParseError, 0, 0, path.string(), "a readable file", "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

// ---------------------------------------------------------------- printing

namespace {

std::string join_value(const std::vector<std::string>& toks) {
  std::string s;
  std::string_view prev;
  for (const auto& t : toks) {
    bool tight = prev == "{" || prev == "(" || prev == "," || t == "}" || t == ")" || t == ",";
    if (!s.empty() && !tight) s += ' ';
    s += t;
    prev = t;
  }
  return s;
}

}  // namespace

std::string print_spec(const SpecDocument& doc) {
  std::string out;
  for (std::size_t k = 0; k < doc.sections.size(); ++k) {
    const auto& s = doc.sections[k];
    if (k > 0) out += '\n';
    out += to_string(s.kind);
    if (s.kind != SectionKind::Settings) out += " " + s.name;
    out += '\n';
    for (const auto& e : s.entries) {
      out += "  " + join_value(e.key) + " =";
      if (!e.value.empty()) out += " " + join_value(e.value);
      out += '\n';
    }
    out += "end\n";
  }
  return out;
}

// ---------------------------------------------------------------- resolution

namespace {

class Resolver {
 public:
  Model model;

  void run(const SpecDocument& doc) {
    for (const auto& s : doc.sections) {
      try {
        section(s);
      } catch (const SpecError&) {
        throw;
      } catch (const Error& e) {
        throw SpecError(e.code(), s.line, s.col, s.name, {}, e.what());
      }
    }
  }

 private:
  std::map<std::string, std::string> kinds_;  // name -> what it declares

  [[noreturn]] static void fail(ErrorCode code, const Entry& e, std::size_t k, const std::string& expected,
                                const std::string& msg) {
    std::size_t col = k < e.value_cols.size() ? e.value_cols[k] : e.col;
    std::string tok = k < e.value.size() ? e.value[k] : (e.key.empty() ? "" : e.key[0]);
    throw SpecError(code, e.line, col, tok, expected, msg);
  }

  void declare(const Section& s, std::string what) {
    if (s.name == "id")
      throw SpecError(ErrorCode::DuplicateName, s.line, s.col, s.name, "another name", "'id' is reserved for identity transports");
    if (auto it = kinds_.find(s.name); it != kinds_.end())
      throw SpecError(ErrorCode::DuplicateName, s.line, s.col, s.name, "a fresh name",
                      "'" + s.name + "' is already declared as a " + it->second);
    kinds_[s.name] = std::move(what);
  }

  /// Entries of `s` must use only `allowed` first-key words.
  static void keys_allowed(const Section& s, std::initializer_list<std::string_view> allowed) {
    std::set<std::vector<std::string>> seen;
    for (const auto& e : s.entries) {
      if (std::find(allowed.begin(), allowed.end(), e.key[0]) == allowed.end()) {
        std::string list;
        for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
        throw SpecError(ErrorCode::ParseError, e.line, e.col, e.key[0], list, "unknown key in " + std::string(to_string(s.kind)));
      }
      if (!seen.insert(e.key).second)
        throw SpecError(ErrorCode::DuplicateName, e.line, e.col, e.key[0], "one entry per key", "key given twice");
    }
  }

  static const Entry& required(const Section& s, std::string_view key) {
    if (auto e = s.find(key)) return *e;
    throw SpecError(ErrorCode::ParseError, s.line, s.col, s.name, std::string(key),
                    std::string(to_string(s.kind)) + " '" + s.name + "' needs '" + std::string(key) + " = ...'");
  }

  static const std::string& single(const Entry& e) {
    if (e.value.size() != 1 || is_punct(e.value[0]))
      fail(ErrorCode::ParseError, e, e.value.size() > 1 ? 1 : 0, "exactly one name", "expected a single name");
    return e.value[0];
  }

  static void words_only(const Entry& e) {
    for (std::size_t k = 0; k < e.value.size(); ++k)
      if (is_punct(e.value[k])) fail(ErrorCode::ParseError, e, k, "a name", "unexpected punctuation");
  }

  template <class M>
  const typename M::mapped_type& lookup(const M& m, const Entry& e, std::size_t k, const char* what) const {
    const auto& name = e.value.at(k);
    if (auto it = m.find(name); it != m.end()) return it->second;
    std::string msg = "no " + std::string(what) + " named '" + name + "'";
    if (auto it = kinds_.find(name); it != kinds_.end()) msg += " ('" + name + "' is a " + it->second + ")";
    fail(ErrorCode::UndeclaredName, e, k, what, msg);
  }

  static std::size_t atom_index(const FinSetoid& s, const Entry& e, std::size_t k, const std::string& token) {
    if (auto i = s.index_of(token)) return *i;
    fail(ErrorCode::UndeclaredName, e, k, "an atom of '" + s.name() + "'", "'" + token + "' is not an atom of '" + s.name() + "'");
  }

  static std::size_t key_atom(const FinSetoid& s, const Entry& e, std::size_t pos) {
    if (e.key.size() <= pos)
      throw SpecError(ErrorCode::ParseError, e.line, e.col, e.key[0], "an index atom", "key needs index atoms");
    if (auto i = s.index_of(e.key[pos])) return *i;
    throw SpecError(ErrorCode::UndeclaredName, e.line, e.col, e.key[pos], "an atom of '" + s.name() + "'",
                    "'" + e.key[pos] + "' is not an index atom");
  }

  static Rat rational(const Entry& e, std::size_t k) {
    try {
      return Rat::parse(e.value[k]);
    } catch (const Error& err) {
      fail(ErrorCode::MalformedRational, e, k, "a rational p/q in lowest terms", err.what());
    }
  }

  void section(const Section& s) {
    switch (s.kind) {
      case SectionKind::Settings: return settings(s);
      case SectionKind::Set: return set(s);
      case SectionKind::Ineq: return ineq(s);
      case SectionKind::Fn: return fn(s);
      case SectionKind::Family: return family(s);
      case SectionKind::Check: return check(s);
    }
  }

  void settings(const Section& s) {
    keys_allowed(s, {"max-atoms", "max-enum"});
    for (const auto& e : s.entries) {
      const auto& v = single(e);
      std::size_t n = 0;
      try {
        std::size_t used = 0;
        n = std::stoul(v, &used);
        if (used != v.size() || n == 0) throw std::invalid_argument(v);
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, e, 0, "a positive integer", "bad bound");
      }
      (e.key[0] == "max-atoms" ? model.bounds.max_atoms : model.bounds.max_enum) = n;
    }
  }

  void set(const Section& s) {
    keys_allowed(s, {"atoms", "blocks"});
    declare(s, "set");
    const auto& a = required(s, "atoms");
    words_only(a);
    std::vector<std::string> atoms = a.value;
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (std::find(atoms.begin(), atoms.begin() + static_cast<long>(k), atoms[k]) != atoms.begin() + static_cast<long>(k))
        fail(ErrorCode::DuplicateName, a, k, "distinct atoms", "atom listed twice");
    std::vector<std::vector<std::string>> blocks;
    if (const auto* b = s.find("blocks")) {
      std::vector<bool> covered(atoms.size(), false);
      std::size_t k = 0;
      while (k < b->value.size()) {
        if (b->value[k] != "{") fail(ErrorCode::ParseError, *b, k, "{", "expected a block '{...}'");
        blocks.emplace_back();
        for (++k; k < b->value.size() && b->value[k] != "}"; ++k) {
          if (is_punct(b->value[k])) fail(ErrorCode::ParseError, *b, k, "an atom or }", "unexpected punctuation");
          auto ix = std::find(atoms.begin(), atoms.end(), b->value[k]);
          if (ix == atoms.end()) fail(ErrorCode::UndeclaredName, *b, k, "a listed atom", "block names an undeclared atom");
          auto i = static_cast<std::size_t>(ix - atoms.begin());
          if (covered[i]) fail(ErrorCode::ParseError, *b, k, "each atom in one block", "atom appears in two blocks");
          covered[i] = true;
          blocks.back().push_back(b->value[k]);
        }
        if (k == b->value.size()) fail(ErrorCode::ParseError, *b, k, "}", "block is not closed");
        if (blocks.back().empty()) fail(ErrorCode::ParseError, *b, k, "an atom", "empty block");
        ++k;
      }
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (!covered[i])
          throw SpecError(ErrorCode::ParseError, b->line, b->col, atoms[i], "a partition covering every atom",
                          "the blocks do not cover atom '" + atoms[i] + "'");
    }
    model.sets[s.name] = FinSetoid::make(s.name, atoms, blocks);
  }

  void ineq(const Section& s) {
    keys_allowed(s, {"on", "neq", "induced-by"});
    declare(s, "ineq");
    const auto& on = required(s, "on");
    single(on);
    const auto& base = lookup(model.sets, on, 0, "set");
    const auto* neq = s.find("neq");
    const auto* by = s.find("induced-by");
    if ((neq != nullptr) == (by != nullptr))
      throw SpecError(ErrorCode::ParseError, s.line, s.col, s.name, "neq or induced-by",
                      "ineq needs exactly one of 'neq = ...' and 'induced-by = ...'");
    if (by) {
      single(*by);
      const auto& fam = lookup(model.fn_families, *by, 0, "function family");
      if (!same_setoid(fam.carrier, base)) fail(ErrorCode::CarrierMismatch, *by, 0, "a family on '" + on.value[0] + "'", "family lives on another set");
      auto r = induce(base, fam);
      model.ineqs[s.name] = IneqSet{base, r.neq_induced};
      return;
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    const auto& v = neq->value;
    for (std::size_t k = 0; k < v.size(); k += 5) {
      if (k + 5 > v.size() || v[k] != "(" || v[k + 2] != "," || v[k + 4] != ")" || is_punct(v[k + 1]) || is_punct(v[k + 3]))
        fail(ErrorCode::ParseError, *neq, k, "(atom,atom)", "expected a pair '(x,y)'");
      atom_index(*base, *neq, k + 1, v[k + 1]);
      atom_index(*base, *neq, k + 3, v[k + 3]);
      pairs.emplace_back(v[k + 1], v[k + 3]);
    }
    model.ineqs[s.name] = make_ineq(base, pairs);
  }

  void fn(const Section& s) {
    keys_allowed(s, {"on", "values", "from", "to", "image"});
    declare(s, "function");
    if (s.find("on")) {
      if (s.find("from") || s.find("to") || s.find("image"))
        throw SpecError(ErrorCode::ParseError, s.line, s.col, s.name, "on/values or from/to/image", "mixed function forms");
      const auto& on = required(s, "on");
      single(on);
      const auto& dom = lookup(model.sets, on, 0, "set");
      const auto& v = required(s, "values");
      if (v.value.size() != dom->size())
        fail(ErrorCode::MissingEntry, v, v.value.size(), std::to_string(dom->size()) + " values",
             "'" + s.name + "' needs one value per atom of '" + dom->name() + "'");
      std::vector<Rat> values;
      for (std::size_t k = 0; k < v.value.size(); ++k) values.push_back(rational(v, k));
      auto f = make_real_fn(dom, std::move(values), s.name);
      if (auto ok = validate_function(f); ok.failed())
        throw SpecError(ErrorCode::PreconditionViolated, v.line, v.col, s.name, "a table constant on blocks",
                        "'" + s.name + "' does not respect the equality of '" + dom->name() + "' at (" +
                            ok.witness->atoms.at(0) + "," + ok.witness->atoms.at(1) + ")");
      model.fns[s.name] = std::move(f);
      return;
    }
    const auto& from = required(s, "from");
    const auto& to = required(s, "to");
    single(from);
    single(to);
    const auto& dom = lookup(model.sets, from, 0, "set");
    const auto& cod = lookup(model.sets, to, 0, "set");
    const auto& im = required(s, "image");
    words_only(im);
    if (im.value.size() != dom->size())
      fail(ErrorCode::MissingEntry, im, im.value.size(), std::to_string(dom->size()) + " atoms",
           "'" + s.name + "' needs one image per atom of '" + dom->name() + "'");
    std::vector<std::size_t> image;
    for (std::size_t k = 0; k < im.value.size(); ++k) image.push_back(atom_index(*cod, im, k, im.value[k]));
    auto m = make_map(dom, cod, std::move(image), s.name);
    if (auto ok = validate_function(m); ok.failed())
      throw SpecError(ErrorCode::PreconditionViolated, im.line, im.col, s.name, "a table respecting equalities",
                      "'" + s.name + "' does not respect the equality of '" + dom->name() + "' at (" +
                          ok.witness->atoms.at(0) + "," + ok.witness->atoms.at(1) + ")");
    model.maps[s.name] = std::move(m);
  }

  void family(const Section& s) {
    const auto& kind_entry = required(s, "kind");
    const auto& kind = single(kind_entry);
    if (kind == "functions") return functions_family(s);
    if (kind == "metric") return metric(s);
    if (kind == "set" || kind == "cs" || kind == "global") return indexed_family(s, kind);
    fail(ErrorCode::ParseError, kind_entry, 0, "functions, metric, set, cs or global", "unknown family kind");
  }

  void functions_family(const Section& s) {
    keys_allowed(s, {"kind", "on", "members"});
    declare(s, "function family");
    const auto& on = required(s, "on");
    single(on);
    const auto& carrier = lookup(model.sets, on, 0, "set");
    FnFamily fam{carrier, {}};
    if (const auto* m = s.find("members")) {
      words_only(*m);
      for (std::size_t k = 0; k < m->value.size(); ++k) {
        const auto& f = lookup(model.fns, *m, k, "real-valued function");
        if (!same_setoid(f.dom, carrier))
          fail(ErrorCode::CarrierMismatch, *m, k, "a function on '" + carrier->name() + "'", "member lives on another set");
        fam.members.push_back(f);
      }
    }
    model.fn_families[s.name] = std::move(fam);
  }

  void metric(const Section& s) {
    keys_allowed(s, {"kind", "on", "row", "pseudometric"});
    declare(s, "function family");
    const auto& on = required(s, "on");
    single(on);
    const auto& z = lookup(model.sets, on, 0, "set");
    DistanceTable d(z->size());
    std::vector<bool> seen(z->size(), false);
    bool pseudo = false;
    for (const auto& e : s.entries) {
      if (e.key[0] == "pseudometric") {
        const auto& v = single(e);
        if (v != "true" && v != "false") fail(ErrorCode::ParseError, e, 0, "true or false", "bad flag");
        pseudo = v == "true";
      }
      if (e.key[0] != "row") continue;
      auto i = key_atom(*z, e, 1);
      if (e.value.size() != z->size())
        fail(ErrorCode::MissingEntry, e, e.value.size(), std::to_string(z->size()) + " distances", "row has the wrong length");
      for (std::size_t k = 0; k < e.value.size(); ++k) d[i].push_back(rational(e, k));
      seen[i] = true;
    }
    for (std::size_t i = 0; i < z->size(); ++i)
      if (!seen[i])
        throw SpecError(ErrorCode::MissingEntry, s.line, s.col, z->atom(i), "row " + z->atom(i) + " = ...", "missing distance row");
    model.fn_families[s.name] = metric_family(z, d, pseudo);
  }

  void indexed_family(const Section& s, const std::string& kind) {
    const bool cs = kind != "set";
    const bool global = kind == "global";
    if (cs)
      keys_allowed(s, {"kind", "index", "index-family", "fiber", "fiber-family", "transport", "fn-transport"});
    else
      keys_allowed(s, {"kind", "index", "fiber", "transport"});
    declare(s, kind == "set" ? "set family" : kind == "cs" ? "cs-family" : "global family");
    const auto& ie = required(s, "index");
    single(ie);
    const auto index = lookup(model.ineqs, ie, 0, "ineq");
    const auto& iset = *index.base;
    const auto n = iset.size();

    std::vector<std::optional<IneqSet>> fibers(n);
    std::vector<std::optional<FnFamily>> fams(n);
    PairTable<Map> transports(n);
    PairTable<std::vector<std::size_t>> fn_transports(n);
    for (const auto& e : s.entries) {
      const auto& w = e.key[0];
      if (w == "fiber") {
        single(e);
        fibers[key_atom(iset, e, 1)] = lookup(model.ineqs, e, 0, "ineq");
      } else if (w == "fiber-family") {
        single(e);
        fams[key_atom(iset, e, 1)] = lookup(model.fn_families, e, 0, "function family");
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!fibers[i])
        throw SpecError(ErrorCode::MissingEntry, s.line, s.col, iset.atom(i), "fiber " + iset.atom(i) + " = ...",
                        "no fiber for index atom '" + iset.atom(i) + "'");
    for (const auto& e : s.entries) {
      const auto& w = e.key[0];
      if (w != "transport" && w != "fn-transport") continue;
      auto i = key_atom(iset, e, 1), j = key_atom(iset, e, 2);
      if (e.key.size() != 3)
        throw SpecError(ErrorCode::ParseError, e.line, e.col, e.key.back(), "two index atoms", "too many key words");
      if (!global && !iset.eq(i, j))
        throw SpecError(ErrorCode::PreconditionViolated, e.line, e.col, e.key[1], "a pair with i = j",
                        "transport off the diagonal of the index equality");
      if (w == "transport") {
        single(e);
        if (e.value[0] == "id") {
          if (!same_setoid(fibers[i]->base, fibers[j]->base))
            fail(ErrorCode::CarrierMismatch, e, 0, "a map", "'id' needs equal fibers");
          auto m = identity_map(fibers[i]->base);
          m.label = "id";
          m.cod = fibers[j]->base;
          transports.set(i, j, std::move(m));
        } else {
          const auto& m = lookup(model.maps, e, 0, "map");
          if (!same_setoid(m.dom, fibers[i]->base) || !same_setoid(m.cod, fibers[j]->base))
            fail(ErrorCode::CarrierMismatch, e, 0, "a map between the two fibers", "transport has the wrong domain or codomain");
          transports.set(i, j, m);
        }
      } else {
        if (!fams[i] || !fams[j])
          throw SpecError(ErrorCode::MissingEntry, e.line, e.col, e.key[1], "fiber-family entries",
                          "fn-transport needs both fiber families first");
        std::vector<std::size_t> table;
        if (e.value.size() == 1 && e.value[0] == "id") {
          if (fams[i]->size() != fams[j]->size()) fail(ErrorCode::DomainMismatch, e, 0, "member indices", "'id' needs equal family sizes");
          for (std::size_t k = 0; k < fams[i]->size(); ++k) table.push_back(k);
        } else {
          if (e.value.size() != fams[i]->size())
            fail(ErrorCode::MissingEntry, e, e.value.size(), std::to_string(fams[i]->size()) + " member indices",
                 "fn-transport needs one target member per source member");
          for (std::size_t k = 0; k < e.value.size(); ++k) {
            std::size_t v = 0, used = 0;
            try {
              v = std::stoul(e.value[k], &used);
            } catch (const std::exception&) {
              used = 0;
            }
            if (used != e.value[k].size() || v >= fams[j]->size())
              fail(ErrorCode::ParseError, e, k, "a member index below " + std::to_string(fams[j]->size()), "bad member index");
            table.push_back(v);
          }
        }
        fn_transports.set(i, j, std::move(table));
      }
    }

    std::vector<IneqSet> fib;
    for (auto& f : fibers) fib.push_back(*f);
    if (!cs) {
      model.set_families[s.name] = Family{index, std::move(fib), std::move(transports)};
      return;
    }
    const auto& ke = required(s, "index-family");
    single(ke);
    const auto& k = lookup(model.fn_families, ke, 0, "function family");
    if (!same_setoid(k.carrier, index.base)) fail(ErrorCode::CarrierMismatch, ke, 0, "a family on the index set", "index family lives elsewhere");
    std::vector<FnFamily> ff;
    for (std::size_t i = 0; i < n; ++i) {
      if (!fams[i])
        throw SpecError(ErrorCode::MissingEntry, s.line, s.col, iset.atom(i), "fiber-family " + iset.atom(i) + " = ...",
                        "no fiber family for index atom '" + iset.atom(i) + "'");
      if (!same_setoid(fams[i]->carrier, fib[i].base))
        throw SpecError(ErrorCode::CarrierMismatch, s.line, s.col, iset.atom(i), "a family on the fiber",
                        "fiber family for '" + iset.atom(i) + "' lives on another set");
      ff.push_back(*fams[i]);
    }
    if (global) {
      model.global_families[s.name] =
          GlobalFamily{index, k, std::move(fib), std::move(ff), std::move(transports), std::move(fn_transports)};
    } else {
      model.cs_families[s.name] = CSFamily{Family{index, std::move(fib), std::move(transports)}, k, std::move(ff), std::move(fn_transports)};
    }
  }

  void check(const Section& s) {
    declare(s, "check");
    CheckDecl c{s.name, {}, {}, s.line};
    const auto& law = required(s, "law");
    words_only(law);
    if (law.value.empty()) fail(ErrorCode::ParseError, law, 0, "a law id", "empty law list");
    for (std::size_t k = 0; k < law.value.size(); ++k) {
      if (!find_law(law.value[k])) fail(ErrorCode::UnknownLawId, law, k, "a registered law id", "unknown law id '" + law.value[k] + "'");
      c.laws.push_back(law.value[k]);
    }
    std::set<std::string> seen;
    for (const auto& e : s.entries) {
      if (e.key.size() != 1)
        throw SpecError(ErrorCode::ParseError, e.line, e.col, e.key[1], "=", "check keys are single words");
      if (!seen.insert(e.key[0]).second)
        throw SpecError(ErrorCode::DuplicateName, e.line, e.col, e.key[0], "one entry per key", "key given twice");
      if (e.key[0] != "law") c.params[e.key[0]] = e.value;
    }
    validate_check(model, c, s);
    model.checks.push_back(std::move(c));
  }
};

}  // namespace

Model resolve(const SpecDocument& doc) {
  Resolver r;
  r.run(doc);
  return std::move(r.model);
}

}  // namespace sepset::spec
