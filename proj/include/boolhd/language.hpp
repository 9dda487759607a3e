#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "boolhd/relations.hpp"

namespace boolhd {

namespace detail {
inline std::optional<int> suffix_number(std::string_view name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
  int v = 0;
  auto tail = name.substr(prefix.size());
  auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), v);
  if (ec != std::errc{} || p != tail.data() + tail.size() || v < 1 || v > Relation::kMaxArity) return std::nullopt;
  return v;
}
}  // namespace detail

/// Relations available without declaration. Besides the fixed names, the
/// families orK, nandK, evenK, oddK exist for every K in 1..16.
inline std::optional<Relation> builtin_relation(std::string_view name) {
  static const std::map<std::string, Relation, std::less<>> fixed = [] {
    std::map<std::string, Relation, std::less<>> m;
    m.emplace("t", rel::t());
    m.emplace("f", rel::f());
    m.emplace("impl", rel::impl());
    m.emplace("xor", rel::xor2());
    m.emplace("eq", rel::eq());
    m.emplace("dup3", rel::dup3());
    m.emplace("nae3", rel::nae3());
    m.emplace("one_in_three", rel::one_in_three());
    m.emplace("horn3", rel::horn3());
    m.emplace("dhorn3", rel::dhorn3());
    return m;
  }();
  if (auto it = fixed.find(name); it != fixed.end()) return it->second;
  if (auto k = detail::suffix_number(name, "nand")) return rel::nand_m(*k);
  if (auto k = detail::suffix_number(name, "or")) return rel::or_m(*k);
  if (auto k = detail::suffix_number(name, "even")) return rel::even_m(*k);
  if (auto k = detail::suffix_number(name, "odd")) return rel::odd_m(*k);
  return std::nullopt;
}

/// A named finite set of relations.
class Language {
 public:
  Language() = default;

  std::size_t size() const noexcept { return relations_.size(); }
  const Relation& relation(std::size_t i) const { return relations_.at(i); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<Relation>& relations() const noexcept { return relations_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  std::size_t add(std::string name, Relation r) {
    if (find(name)) fail(ErrorKind::Parse, "duplicate relation name '" + name + "'");
    names_.push_back(std::move(name));
    relations_.push_back(std::move(r));
    return relations_.size() - 1;
  }

  /// Index of `name`, adding the builtin definition if it is not declared.
  std::size_t resolve(std::string_view name) {
    if (auto i = find(name)) return *i;
    auto b = builtin_relation(name);
    if (!b) fail(ErrorKind::Parse, "unknown relation '" + std::string(name) + "'");
    return add(std::string(name), std::move(*b));
  }

  static Language of(std::initializer_list<std::string_view> builtins) {
    Language l;
    for (auto n : builtins) l.resolve(n);
    return l;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Relation> relations_;
};

inline TupleCode parse_tuple(std::string_view bits, int arity) {
  if (static_cast<int>(bits.size()) != arity) fail(ErrorKind::Parse, "tuple '" + std::string(bits) + "' has wrong length");
  TupleCode t = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') fail(ErrorKind::Parse, "tuple '" + std::string(bits) + "' is not a bitstring");
    t = (t << 1) | static_cast<TupleCode>(c - '0');
  }
  return t;
}

inline std::string strip_comment(std::string line) {
  if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
  return line;
}

inline Language parse_language(std::istream& in) {
  Language lang;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(strip_comment(line));
    std::string kw;
    if (!(ss >> kw)) continue;
    auto where = " (line " + std::to_string(lineno) + ")";
    if (kw != "rel") fail(ErrorKind::Parse, "expected 'rel'" + where);
    std::string name, tuples;
    int arity = 0;
    if (!(ss >> name >> arity >> tuples)) fail(ErrorKind::Parse, "malformed rel line" + where);
    std::string extra;
    if (ss >> extra) fail(ErrorKind::Parse, "trailing text on rel line" + where);
    if (arity < 1 || arity > Relation::kMaxArity) fail(ErrorKind::Parse, "arity out of range" + where);
    std::vector<TupleCode> ts;
    std::string_view rest = tuples;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      auto tok = rest.substr(0, comma);
      ts.push_back(parse_tuple(tok, arity));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    lang.add(name, Relation(arity, std::move(ts)));
  }
  return lang;
}

inline Language load_language(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open language file '" + path + "'");
  return parse_language(in);
}

inline std::string format_relation_line(const std::string& name, const Relation& r) {
  std::string s = "rel " + name + " " + std::to_string(r.arity()) + " ";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ',';
    s += tuple_string(r.tuples()[i], r.arity());
  }
  return s;
}

inline std::string format_language(const Language& lang) {
  std::string s;
  for (std::size_t i = 0; i < lang.size(); ++i) s += format_relation_line(lang.name(i), lang.relation(i)) + "\n";
  return s;
}

}  // namespace boolhd
