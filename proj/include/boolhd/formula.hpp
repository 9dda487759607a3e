#pragma once

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "boolhd/language.hpp"
#include "boolhd/outcome.hpp"

namespace boolhd {

struct Atom {
  std::size_t rel;
  std::vector<int> vars;  // 0-based, repetitions allowed
};

/// Conjunction of atoms over a language.
class Formula {
 public:
  Formula(std::shared_ptr<const Language> lang, int var_count) : lang_(std::move(lang)), n_(var_count) {
    if (n_ < 1) fail(ErrorKind::Parse, "formula needs at least one variable");
  }
  Formula(Language lang, int var_count) : Formula(std::make_shared<const Language>(std::move(lang)), var_count) {}

  int var_count() const noexcept { return n_; }
  const Language& language() const noexcept { return *lang_; }
  const std::shared_ptr<const Language>& language_ptr() const noexcept { return lang_; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const Relation& relation_of(const Atom& a) const { return lang_->relation(a.rel); }

  Formula& add(std::size_t rel, std::vector<int> vars) {
    if (rel >= lang_->size()) fail(ErrorKind::Parse, "relation index out of range");
    if (static_cast<int>(vars.size()) != lang_->relation(rel).arity())
      fail(ErrorKind::Parse, "atom over '" + lang_->name(rel) + "' has wrong arity");
    for (int v : vars)
      if (v < 0 || v >= n_) fail(ErrorKind::Parse, "variable index out of range");
    atoms_.push_back({rel, std::move(vars)});
    return *this;
  }

  /// Adds an atom by relation name; undeclared builtins extend a private copy
  /// of the language.
  Formula& add(std::string_view name, std::vector<int> vars) {
    auto idx = lang_->find(name);
    if (!idx) {
      auto copy = std::make_shared<Language>(*lang_);
      idx = copy->resolve(name);
      lang_ = std::move(copy);
    }
    return add(*idx, std::move(vars));
  }

  std::vector<std::size_t> used_relations() const {
    std::vector<std::size_t> out;
    for (const auto& a : atoms_) out.push_back(a.rel);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Relation> used_language() const {
    std::vector<Relation> out;
    for (auto i : used_relations()) out.push_back(lang_->relation(i));
    return out;
  }

  TupleCode atom_tuple(const Atom& a, const Assignment& m) const {
    TupleCode t = 0;
    for (int v : a.vars) t = (t << 1) | (m[static_cast<std::size_t>(v)] & 1u);
    return t;
  }

 private:
  std::shared_ptr<const Language> lang_;
  int n_;
  std::vector<Atom> atoms_;
};

// ---------------------------------------------------------------------------
// Assignments

inline Assignment parse_assignment(std::string_view bits) {
  Assignment m;
  for (char c : bits) {
    if (c != '0' && c != '1') fail(ErrorKind::Parse, "assignment '" + std::string(bits) + "' is not a bitstring");
    m.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  if (m.empty()) fail(ErrorKind::Parse, "empty assignment");
  return m;
}

inline std::string to_string(const Assignment& m) {
  std::string s;
  for (auto b : m) s += b ? '1' : '0';
  return s;
}

inline Assignment complement(Assignment m) {
  for (auto& b : m) b ^= 1u;
  return m;
}

inline int hamming(const Assignment& a, const Assignment& b) {
  if (a.size() != b.size()) fail(ErrorKind::LengthMismatch, "assignments differ in length");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

inline void check_length(const Formula& phi, const Assignment& m) {
  if (static_cast<int>(m.size()) != phi.var_count())
    fail(ErrorKind::LengthMismatch, "assignment length " + std::to_string(m.size()) + " but formula has " +
                                        std::to_string(phi.var_count()) + " variables");
}

inline bool satisfies(const Formula& phi, const Assignment& m) {
  check_length(phi, m);
  return std::all_of(phi.atoms().begin(), phi.atoms().end(),
                     [&](const Atom& a) { return phi.relation_of(a).contains(phi.atom_tuple(a, m)); });
}

// Models as integer codes with x_1 as the most significant bit, so that
// numeric order is lexicographic order.
inline std::uint32_t to_code(const Assignment& m) {
  std::uint32_t c = 0;
  for (auto b : m) c = (c << 1) | (b & 1u);
  return c;
}

inline Assignment from_code(std::uint32_t c, int n) {
  Assignment m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((c >> (n - 1 - i)) & 1u);
  return m;
}

struct ModelList {
  std::vector<Assignment> models;
  bool truncated = false;
};

namespace detail {
/// Depth-first model enumeration in lexicographic order; each atom is checked
/// as soon as its last variable is assigned.
template <class Visit>
void for_each_model(const Formula& phi, Visit&& visit) {
  const int n = phi.var_count();
  std::vector<std::vector<const Atom*>> due(static_cast<std::size_t>(n));
  for (const auto& a : phi.atoms()) {
    if (a.vars.empty()) continue;
    due[static_cast<std::size_t>(*std::max_element(a.vars.begin(), a.vars.end()))].push_back(&a);
  }
  Assignment m(static_cast<std::size_t>(n), 0);
  bool stop = false;
  auto rec = [&](auto& self, int i) -> void {
    if (i == n) {
      if (!visit(static_cast<const Assignment&>(m))) stop = true;
      return;
    }
    for (std::uint8_t b = 0; b < 2 && !stop; ++b) {
      m[static_cast<std::size_t>(i)] = b;
      bool ok = true;
      for (const Atom* a : due[static_cast<std::size_t>(i)])
        if (!(ok = phi.relation_of(*a).contains(phi.atom_tuple(*a, m)))) break;
      if (ok) self(self, i + 1);
    }
    m[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0);
}

inline void check_cap(const Formula& phi, int cap) {
  if (phi.var_count() > cap)
    fail(ErrorKind::TooLarge, std::to_string(phi.var_count()) + " variables exceed the enumeration cap of " + std::to_string(cap));
}
}  // namespace detail

inline ModelList enumerate_models(const Formula& phi, std::size_t max_models = SIZE_MAX, int var_cap = 24) {
  detail::check_cap(phi, var_cap);
  ModelList out;
  detail::for_each_model(phi, [&](const Assignment& m) {
    if (out.models.size() == max_models) {
      out.truncated = true;
      return false;
    }
    out.models.push_back(m);
    return true;
  });
  return out;
}

inline std::vector<std::uint32_t> model_codes(const Formula& phi, int var_cap = 24) {
  detail::check_cap(phi, var_cap);
  std::vector<std::uint32_t> out;
  detail::for_each_model(phi, [&](const Assignment& m) {
    out.push_back(to_code(m));
    return true;
  });
  return out;
}

/// Lexicographically first pair of distinct codes at minimum Hamming distance.
inline std::pair<std::uint32_t, std::uint32_t> closest_pair(const std::vector<std::uint32_t>& codes, int n) {
  ensure(codes.size() >= 2, "closest_pair needs two codes");
  if (codes.size() <= 4096) {
    std::pair<std::uint32_t, std::uint32_t> best{codes[0], codes[1]};
    int bd = std::popcount(codes[0] ^ codes[1]);
    for (std::size_t i = 0; i < codes.size() && bd > 1; ++i)
      for (std::size_t j = i + 1; j < codes.size(); ++j) {
        int d = std::popcount(codes[i] ^ codes[j]);
        if (d < bd) {
          bd = d;
          best = {codes[i], codes[j]};
          if (d == 1) break;
        }
      }
    return best;
  }
  std::unordered_set<std::uint32_t> set(codes.begin(), codes.end());
  for (int d = 1; d <= n; ++d) {
    for (std::uint32_t a : codes) {
      std::optional<std::uint32_t> best_b;
      // all masks of weight d over n bits, via Gosper's hack
      for (std::uint64_t mask = (std::uint64_t{1} << d) - 1; mask < (std::uint64_t{1} << n);) {
        auto b = a ^ static_cast<std::uint32_t>(mask);
        if (b > a && set.count(b) && (!best_b || b < *best_b)) best_b = b;
        std::uint64_t c = mask & (~mask + 1), r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
      }
      if (best_b) return {a, *best_b};
    }
  }
  fail(ErrorKind::Internal, "no pair found");
}

/// Exact optimum by full enumeration. Witnesses are lexicographically first.
inline SolveOutcome oracle_optimize(Problem p, const Formula& phi, const std::optional<Assignment>& m = std::nullopt,
                                    int cap = 24) {
  const int n = phi.var_count();
  if (p != Problem::MSD) {
    if (!m) fail(ErrorKind::Parse, "an assignment is required");
    check_length(phi, *m);
  }
  if (p == Problem::XSOL && !satisfies(phi, *m)) fail(ErrorKind::NotAModel, "input assignment does not satisfy the formula");
  detail::check_cap(phi, cap);
  SolveOutcome out;
  out.route = "oracle";
  out.guarantee = Guarantee::exact();
  if (p == Problem::NSOL && satisfies(phi, *m)) {
    out.value = 0;
    out.witness = *m;
    return out;
  }
  auto codes = model_codes(phi, cap);
  if (codes.empty()) fail(ErrorKind::Unsatisfiable, "formula has no model");
  if (p == Problem::MSD) {
    if (codes.size() < 2) fail(ErrorKind::NoSecondModel, "formula has a unique model");
    auto [a, b] = closest_pair(codes, n);
    out.value = std::popcount(a ^ b);
    out.witness = from_code(a, n);
    out.witness2 = from_code(b, n);
    return out;
  }
  if (p != Problem::NSOL && p != Problem::XSOL) fail(ErrorKind::Parse, "oracle supports NSOL, XSOL and MSD");
  const auto mc = to_code(*m);
  std::optional<std::uint32_t> best;
  for (auto c : codes) {
    if (p == Problem::XSOL && c == mc) continue;
    if (!best || std::popcount(c ^ mc) < std::popcount(*best ^ mc)) best = c;
  }
  if (!best) fail(ErrorKind::NoSecondModel, "formula has no other model");
  out.value = std::popcount(*best ^ mc);
  out.witness = from_code(*best, n);
  return out;
}

// ---------------------------------------------------------------------------
// Duality

inline std::string dual_relation_name(const std::string& name, const Relation& dual_rel) {
  std::vector<std::string> candidates = {"t", "f", "xor", "eq", "dup3", "nae3", "one_in_three", "horn3", "dhorn3"};
  for (const char* fam : {"or", "nand", "even", "odd"}) candidates.push_back(fam + std::to_string(dual_rel.arity()));
  for (const auto& c : candidates)
    if (auto b = builtin_relation(c); b && *b == dual_rel) return c;
  return name + "_dual";
}

/// Same atoms over the dual relations: m satisfies φ iff complement(m)
/// satisfies the result.
inline Formula dualize_formula(const Formula& phi) {
  Language dl;
  const auto& lang = phi.language();
  for (std::size_t i = 0; i < lang.size(); ++i) {
    Relation d = dualize(lang.relation(i));
    std::string name = dual_relation_name(lang.name(i), d);
    while (dl.find(name)) name += "_dual";
    dl.add(name, std::move(d));
  }
  Formula out(std::move(dl), phi.var_count());
  for (const auto& a : phi.atoms()) out.add(a.rel, a.vars);
  return out;
}

// ---------------------------------------------------------------------------
// Formula files

inline Formula parse_formula(std::istream& in, const std::filesystem::path& base_dir = ".") {
  std::shared_ptr<Language> lang;
  int n = 0;
  std::optional<Formula> phi;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(strip_comment(line));
    std::string head;
    if (!(ss >> head)) continue;
    auto where = " (line " + std::to_string(lineno) + ")";
    if (head == "lang") {
      std::string src;
      if (lang || !(ss >> src)) fail(ErrorKind::Parse, "malformed or repeated lang line" + where);
      if (src == "builtin") lang = std::make_shared<Language>();
      else {
        std::filesystem::path p(src);
        lang = std::make_shared<Language>(load_language((p.is_absolute() ? p : base_dir / p).string()));
      }
      continue;
    }
    if (head == "vars") {
      if (!lang || phi || !(ss >> n) || n < 1) fail(ErrorKind::Parse, "malformed vars line" + where);
      phi.emplace(std::shared_ptr<const Language>(lang), n);
      continue;
    }
    if (!phi) fail(ErrorKind::Parse, "atom before 'lang' and 'vars' headers" + where);
    std::vector<int> vars;
    std::string tok;
    while (ss >> tok) {
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || p != tok.data() + tok.size()) fail(ErrorKind::Parse, "bad variable index '" + tok + "'" + where);
      if (v < 1 || v > n) fail(ErrorKind::Parse, "variable index out of range" + where);
      vars.push_back(v - 1);
    }
    phi->add(head, std::move(vars));
  }
  if (!phi) fail(ErrorKind::Parse, "formula file lacks 'lang' or 'vars' header");
  return std::move(*phi);
}

inline Formula load_formula(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open formula file '" + path + "'");
  return parse_formula(in, std::filesystem::path(path).parent_path());
}

/// Self-contained formula text: relations are declared inline via a sibling
/// language file named `lang_file`.
inline std::string format_formula(const Formula& phi, const std::string& lang_file) {
  std::string s = "lang " + lang_file + "\nvars " + std::to_string(phi.var_count()) + "\n";
  for (const auto& a : phi.atoms()) {
    s += phi.language().name(a.rel);
    for (int v : a.vars) s += " " + std::to_string(v + 1);
    s += "\n";
  }
  return s;
}

}  // namespace boolhd
