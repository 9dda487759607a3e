#pragma once

#include <boolhd/boolhd.hpp>

#include <random>
#include <string>
#include <vector>

namespace boolhd::testing {

inline Relation random_relation(std::mt19937_64& rng, int arity) {
  std::bernoulli_distribution coin(0.5);
  std::vector<TupleCode> ts;
  for (TupleCode t = 0; t <= tuple_mask(arity); ++t)
    if (coin(rng)) ts.push_back(t);
  if (ts.empty()) ts.push_back(static_cast<TupleCode>(rng() & tuple_mask(arity)));
  return Relation(arity, ts);
}

inline Assignment random_assignment(std::mt19937_64& rng, int n) {
  Assignment m(static_cast<std::size_t>(n));
  for (auto& b : m) b = static_cast<std::uint8_t>(rng() & 1u);
  return m;
}

/// Random formula over the relations of `lang` with `atoms` atoms.
inline Formula random_formula(std::mt19937_64& rng, std::shared_ptr<const Language> lang, int n, int atoms) {
  Formula phi(lang, n);
  for (int a = 0; a < atoms; ++a) {
    auto r = static_cast<std::size_t>(rng() % lang->size());
    std::vector<int> vars;
    for (int i = 0; i < lang->relation(r).arity(); ++i) vars.push_back(static_cast<int>(rng() % static_cast<unsigned>(n)));
    phi.add(r, vars);
  }
  return phi;
}

/// Random formula with at least `min_models` models (retrying).
inline Formula random_formula_with_models(std::mt19937_64& rng, std::shared_ptr<const Language> lang, int max_vars,
                                          int max_atoms, std::size_t min_models) {
  while (true) {
    int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_vars));
    int atoms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_atoms));
    Formula phi = random_formula(rng, lang, n, atoms);
    if (enumerate_models(phi, min_models).models.size() >= min_models) return phi;
  }
}

inline std::shared_ptr<const Language> lang_of(std::initializer_list<std::string_view> names) {
  return std::make_shared<const Language>(Language::of(names));
}

}  // namespace boolhd::testing

namespace boolhd::testing {

struct AtomSpec {
  std::string_view rel;
  std::vector<int> vars;  // 1-based
};

/// Formula over builtins, e.g. fml(2, {{"or2", {1, 2}}}).
inline Formula fml(int n, std::initializer_list<AtomSpec> atoms) {
  Formula phi(Language{}, n);
  for (const auto& a : atoms) {
    std::vector<int> vs;
    for (int v : a.vars) vs.push_back(v - 1);
    phi.add(a.rel, vs);
  }
  return phi;
}

inline Assignment bits(std::string_view s) { return parse_assignment(s); }

}  // namespace boolhd::testing
