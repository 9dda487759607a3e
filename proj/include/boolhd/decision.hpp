#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "boolhd/clausal.hpp"
#include "boolhd/formula.hpp"
#include "boolhd/gf2.hpp"

namespace boolhd {

inline PropertyFlags language_flags(const Formula& phi) {
  PropertyFlags f = PropertyFlags::all();
  for (auto i : phi.used_relations()) f = f & phi.language().relation(i).flags();
  return f;
}

enum class SchaeferClass { Horn, DualHorn, Bijunctive, Affine };

inline std::optional<SchaeferClass> schaefer_class(const PropertyFlags& f) {
  if (f.horn) return SchaeferClass::Horn;
  if (f.dual_horn) return SchaeferClass::DualHorn;
  if (f.bijunctive) return SchaeferClass::Bijunctive;
  if (f.affine) return SchaeferClass::Affine;
  return std::nullopt;
}

inline ShapeSpec shape_of(SchaeferClass c) {
  switch (c) {
    case SchaeferClass::Horn: return {Shape::Horn};
    case SchaeferClass::DualHorn: return {Shape::DualHorn};
    case SchaeferClass::Bijunctive: return {Shape::Bijunctive};
    case SchaeferClass::Affine: return {Shape::Parity};
  }
  return {Shape::Horn};
}

inline gf2::Gf2System parity_system(int n, const std::vector<Clause>& eqs) {
  gf2::Gf2System s(static_cast<std::size_t>(n));
  for (const Clause& c : eqs) {
    gf2::BitVec row(static_cast<std::size_t>(n));
    for (int v : c.positives) row.flip(static_cast<std::size_t>(v));
    s.add(std::move(row), c.parity);
  }
  return s;
}

inline Assignment to_assignment(const gf2::BitVec& v) {
  Assignment m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m[i] = v.get(i);
  return m;
}

inline gf2::BitVec to_bitvec(const Assignment& m) {
  gf2::BitVec v(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) v.set(i, m[i]);
  return v;
}

/// Polynomial model finder for one Schaefer class, with optional extra units.
class ClauseSolver {
 public:
  ClauseSolver(const Formula& phi, SchaeferClass c)
      : n_(phi.var_count()), cls_(c), clauses_(formula_clauses(phi, shape_of(c))) {}

  SchaeferClass schaefer() const noexcept { return cls_; }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }

  std::optional<Assignment> solve(const std::vector<std::pair<int, int>>& units = {}) const {
    std::vector<Clause> cs = clauses_;
    for (auto [v, b] : units)
      cs.push_back(cls_ == SchaeferClass::Affine ? Clause::equation({v}, b == 1) : b ? Clause::make({v}, {}) : Clause::make({}, {v}));
    switch (cls_) {
      case SchaeferClass::Horn: return horn_min_model(n_, cs);
      case SchaeferClass::DualHorn: return dual_horn_max_model(n_, cs);
      case SchaeferClass::Bijunctive: return two_sat(n_, cs);
      case SchaeferClass::Affine: {
        auto sol = gf2::solve_affine(parity_system(n_, cs));
        if (!sol) return std::nullopt;
        return to_assignment(sol->particular);
      }
    }
    return std::nullopt;
  }

 private:
  int n_;
  SchaeferClass cls_;
  std::vector<Clause> clauses_;
};

namespace detail {
inline std::optional<Assignment> first_model(const Formula& phi, int cap) {
  check_cap(phi, cap);
  std::optional<Assignment> out;
  for_each_model(phi, [&](const Assignment& m) {
    out = m;
    return false;
  });
  return out;
}

inline void require_model(const Formula& phi, const Assignment& m) {
  if (!satisfies(phi, m)) fail(ErrorKind::NotAModel, "input assignment does not satisfy the formula");
}

/// Closest model other than m by enumeration, ties to the lexicographically first.
inline std::optional<Assignment> closest_other_model(const Formula& phi, const Assignment& m, int cap) {
  check_cap(phi, cap);
  std::optional<Assignment> best;
  int bd = 0;
  for_each_model(phi, [&](const Assignment& x) {
    if (x != m) {
      int d = hamming(x, m);
      if (!best || d < bd) best = x, bd = d;
    }
    return true;
  });
  return best;
}

inline bool closer(const Assignment& cand, const std::optional<Assignment>& best, const Assignment& m) {
  if (!best) return true;
  int a = hamming(cand, m), b = hamming(*best, m);
  return a < b || (a == b && cand < *best);
}
}  // namespace detail

/// A model of φ, or nullopt. Polynomial in Schaefer's tractable classes;
/// exhaustive under the cap otherwise.
inline std::optional<Assignment> sat_solve(const Formula& phi, int cap = 24) {
  const int n = phi.var_count();
  const auto f = language_flags(phi);
  if (f.zero_valid) return Assignment(static_cast<std::size_t>(n), 0);
  if (f.one_valid) return Assignment(static_cast<std::size_t>(n), 1);
  if (auto c = schaefer_class(f)) {
    auto m = ClauseSolver(phi, *c).solve();
    ensure(!m || satisfies(phi, *m), "sat_solve model satisfies the formula");
    return m;
  }
  return detail::first_model(phi, cap);
}

/// A model different from m, closest among those found, or nullopt if m is
/// the unique model.
inline std::optional<Assignment> another_sat(const Formula& phi, const Assignment& m, int cap = 24) {
  check_length(phi, m);
  detail::require_model(phi, m);
  const int n = phi.var_count();
  const auto f = language_flags(phi);
  std::optional<Assignment> best;
  if (auto c = schaefer_class(f)) {
    ClauseSolver s(phi, *c);
    for (int i = 0; i < n; ++i)
      if (auto x = s.solve({{i, 1 - m[static_cast<std::size_t>(i)]}}); x && detail::closer(*x, best, m)) best = x;
    return best;
  }
  if (f.complementive || (f.zero_valid && f.one_valid)) {
    std::vector<Assignment> cands;
    if (f.complementive) cands.push_back(complement(m));
    if (f.zero_valid && f.one_valid) {
      cands.emplace_back(static_cast<std::size_t>(n), 0);
      cands.emplace_back(static_cast<std::size_t>(n), 1);
    }
    for (const auto& x : cands)
      if (x != m && satisfies(phi, x) && detail::closer(x, best, m)) best = x;
    return best;
  }
  return detail::closest_other_model(phi, m, cap);
}

/// Two distinct models, or nullopt if φ has fewer than two.
inline std::optional<std::pair<Assignment, Assignment>> tssat(const Formula& phi, int cap = 24) {
  const int n = phi.var_count();
  const auto f = language_flags(phi);
  if (f.zero_valid && f.one_valid)
    return std::pair{Assignment(static_cast<std::size_t>(n), 0), Assignment(static_cast<std::size_t>(n), 1)};
  if (schaefer_class(f)) {
    auto m = sat_solve(phi, cap);
    if (!m) return std::nullopt;
    auto m2 = another_sat(phi, *m, cap);
    if (!m2) return std::nullopt;
    return std::pair{*m, *m2};
  }
  detail::check_cap(phi, cap);
  std::vector<Assignment> found;
  detail::for_each_model(phi, [&](const Assignment& x) {
    found.push_back(x);
    return found.size() < 2;
  });
  if (found.size() < 2) return std::nullopt;
  return std::pair{found[0], found[1]};
}

/// Whether some model other than m lies at distance below n. In Schaefer's
/// classes every pair (flip x_i, keep x_j) is tried.
inline bool another_sat_lt_n(const Formula& phi, const Assignment& m, int cap = 24) {
  check_length(phi, m);
  detail::require_model(phi, m);
  const int n = phi.var_count();
  if (n < 2) return false;
  if (auto c = schaefer_class(language_flags(phi))) {
    ClauseSolver s(phi, *c);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && s.solve({{i, 1 - m[static_cast<std::size_t>(i)]}, {j, m[static_cast<std::size_t>(j)]}})) return true;
    return false;
  }
  auto x = detail::closest_other_model(phi, m, cap);
  return x && hamming(*x, m) < n;
}

}  // namespace boolhd
