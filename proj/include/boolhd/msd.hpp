#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "boolhd/clausal.hpp"
#include "boolhd/decision.hpp"
#include "boolhd/gf2.hpp"
#include "boolhd/nsol.hpp"

namespace boolhd {

namespace detail {

inline SolveOutcome pair_outcome(Assignment a, Assignment b, Guarantee g, std::string route) {
  SolveOutcome o;
  o.value = hamming(a, b);
  o.witness = std::move(a);
  o.witness2 = std::move(b);
  o.guarantee = g;
  o.route = std::move(route);
  return o;
}

// Literal l = 2v for x_v, 2v + 1 for its negation.
inline int lit_var(int l) { return l >> 1; }
inline int lit_neg(int l) { return l ^ 1; }

}  // namespace detail

/// Exact MSD for bijunctive formulas. The clause set is closed under unit
/// resolution and binary resolution, with (¬x ∨ x) added for every variable;
/// the answer is the smallest class of literals that imply each other.
inline SolveOutcome msd_bijunctive(const Formula& phi) {
  using detail::lit_neg;
  const int n = phi.var_count();
  const int L = 2 * n;
  const auto clauses = formula_clauses(phi, {Shape::Bijunctive});
  // c[a][b]: clause (a ∨ b); c[a][a] is the unit (a).
  std::vector<std::vector<char>> c(static_cast<std::size_t>(L), std::vector<char>(static_cast<std::size_t>(L), 0));
  auto at = [&](int a, int b) -> char& { return c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  auto put = [&](int a, int b) {
    bool fresh = !at(a, b);
    at(a, b) = at(b, a) = 1;
    return fresh;
  };
  for (int v = 0; v < n; ++v) put(2 * v, 2 * v + 1);
  for (const Clause& cl : clauses) {
    std::vector<int> lits;
    for (int v : cl.positives) lits.push_back(2 * v);
    for (int v : cl.negatives) lits.push_back(2 * v + 1);
    put(lits[0], lits.back());
  }

  std::vector<int> fixed(static_cast<std::size_t>(n), -1);
  std::vector<char> alive(static_cast<std::size_t>(L), 1);
  bool empty_clause = false;
  auto eliminate = [&](int a) {  // a is true
    fixed[static_cast<std::size_t>(detail::lit_var(a))] = (a & 1) ? 0 : 1;
    const int na = lit_neg(a);
    for (int b = 0; b < L; ++b) {
      if (!alive[static_cast<std::size_t>(b)]) continue;
      if (at(na, b)) {
        if (b == na) empty_clause = true;
        else if (b != a) put(b, b);
      }
    }
    for (int x : {a, na}) {
      alive[static_cast<std::size_t>(x)] = 0;
      for (int b = 0; b < L; ++b) at(x, b) = at(b, x) = 0;
    }
  };

  bool changed = true;
  while (changed && !empty_clause) {
    changed = false;
    for (int a = 0; a < L && !empty_clause; ++a)
      if (alive[static_cast<std::size_t>(a)] && at(a, a)) {
        eliminate(a);
        changed = true;
      }
    if (changed || empty_clause) continue;
    // (a ∨ b), (¬b ∨ d) ⊢ (a ∨ d)
    for (int b = 0; b < L; ++b)
      for (int a = 0; a < L; ++a) {
        if (!at(a, b)) continue;
        for (int d = 0; d < L; ++d)
          if (at(lit_neg(b), d) && d != lit_neg(a) && put(a, d)) changed = true;
      }
  }
  if (empty_clause) fail(ErrorKind::Unsatisfiable, "formula has no model");
  std::vector<int> lits;
  for (int a = 0; a < L; ++a)
    if (alive[static_cast<std::size_t>(a)]) lits.push_back(a);
  if (lits.empty()) fail(ErrorKind::UniqueModel, "formula has a unique model");

  // a implies b iff (¬a ∨ b) is present.
  auto implies = [&](int a, int b) { return a == b || at(lit_neg(a), b); };
  std::vector<int> pivot;
  std::vector<char> seen(static_cast<std::size_t>(L), 0);
  for (int a : lits) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    std::vector<int> cls;
    for (int b : lits)
      if (implies(a, b) && implies(b, a)) cls.push_back(b), seen[static_cast<std::size_t>(b)] = 1;
    if (pivot.empty() || cls.size() < pivot.size()) pivot = cls;
  }

  // Pivot literals false, their predecessors false, successors true; the
  // remaining variables from a model of the closed clause set.
  std::vector<Clause> d;
  for (int a : lits)
    for (int b : lits)
      if (a <= b && at(a, b) && b != lit_neg(a)) {
        std::vector<int> pos, neg;
        for (int x : {a, b}) ((x & 1) ? neg : pos).push_back(detail::lit_var(x));
        d.push_back(Clause::make(pos, neg));
      }
  auto set_lit = [&](int l, int val) {
    int v = detail::lit_var(l);
    int b = (l & 1) ? 1 - val : val;
    d.push_back(b ? Clause::make({v}, {}) : Clause::make({}, {v}));
  };
  const int p0 = pivot.front();
  for (int a : lits) {
    if (std::find(pivot.begin(), pivot.end(), a) != pivot.end()) set_lit(a, 0);
    else if (implies(a, p0)) set_lit(a, 0);
    else if (implies(p0, a)) set_lit(a, 1);
  }
  auto base = two_sat(n, d);
  ensure(base.has_value(), "pivot assignment extends to a model of the closed clause set");
  Assignment m1 = *base;
  for (int v = 0; v < n; ++v)
    if (fixed[static_cast<std::size_t>(v)] >= 0) m1[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(fixed[static_cast<std::size_t>(v)]);
  Assignment m2 = m1;
  for (int a : pivot) m2[static_cast<std::size_t>(detail::lit_var(a))] ^= 1u;
  ensure(satisfies(phi, m1) && satisfies(phi, m2), "bijunctive MSD witnesses are models");
  ensure(hamming(m1, m2) == static_cast<int>(pivot.size()), "bijunctive MSD witnesses realise the class size");
  return detail::pair_outcome(std::move(m1), std::move(m2), Guarantee::exact(), "bijunctive_closure");
}

/// Exact MSD for Horn formulas. The clause set is closed under unit
/// resolution and hyper-resolution against implications (¬x ∨ y); the answer
/// is the smallest class of mutually implying variables that contains no
/// variable determined by other members' implicants.
inline SolveOutcome msd_horn(const Formula& phi) {
  const int n = phi.var_count();
  struct HC {
    std::vector<int> neg;
    int pos;  // -1 if none
    bool operator<(const HC& o) const { return std::tie(pos, neg) < std::tie(o.pos, o.neg); }
  };
  std::set<HC> d;
  for (const Clause& cl : formula_clauses(phi, {Shape::Horn}))
    d.insert({cl.negatives, cl.positives.empty() ? -1 : cl.positives[0]});
  for (int v = 0; v < n; ++v) d.insert({{v}, v});

  std::vector<int> fixed(static_cast<std::size_t>(n), -1);
  std::size_t unit_steps = 0, hyper_steps = 0;
  const std::size_t initial = d.size();
  while (true) {
    if (d.count({{}, -1})) fail(ErrorKind::Unsatisfiable, "formula has no model");
    // Unit resolution and subsumption.
    auto unit = std::find_if(d.begin(), d.end(), [](const HC& h) { return h.neg.size() + (h.pos >= 0) == 1; });
    if (unit != d.end()) {
      ++unit_steps;
      const bool positive = unit->pos >= 0;
      const int x = positive ? unit->pos : unit->neg[0];
      fixed[static_cast<std::size_t>(x)] = positive ? 1 : 0;
      std::set<HC> next;
      for (const HC& h : d) {
        const bool has_neg = std::binary_search(h.neg.begin(), h.neg.end(), x);
        if (positive ? h.pos == x : has_neg) continue;
        HC r = h;
        if (positive) r.neg.erase(std::remove(r.neg.begin(), r.neg.end(), x), r.neg.end());
        else if (r.pos == x) r.pos = -1;
        next.insert(std::move(r));
      }
      d = std::move(next);
      continue;
    }
    // (¬x ∨ y1) ... (¬x ∨ yk), (¬y1 ∨ ... ∨ ¬yk ∨ z) ⊢ (¬x ∨ z), likewise without z.
    std::vector<std::vector<char>> imp(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<char> present(static_cast<std::size_t>(n), 0);
    for (const HC& h : d) {
      if (h.neg.size() == 1 && h.pos >= 0) imp[static_cast<std::size_t>(h.neg[0])][static_cast<std::size_t>(h.pos)] = 1;
      for (int v : h.neg) present[static_cast<std::size_t>(v)] = 1;
      if (h.pos >= 0) present[static_cast<std::size_t>(h.pos)] = 1;
    }
    std::vector<HC> fresh;
    for (const HC& h : d) {
      if (h.neg.empty()) continue;
      for (int x = 0; x < n; ++x) {
        if (!present[static_cast<std::size_t>(x)]) continue;
        bool all = true;
        for (int y : h.neg) all = all && imp[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        if (!all) continue;
        HC r{{x}, h.pos};
        if (r.pos == x) continue;
        if (!d.count(r)) fresh.push_back(std::move(r));
      }
    }
    if (fresh.empty()) break;
    for (auto& r : fresh)
      if (d.insert(std::move(r)).second) ++hyper_steps;
  }
  ensure(unit_steps <= static_cast<std::size_t>(n), "each unit step fixes a new variable");
  ensure(hyper_steps <= static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1 + initial),
         "hyper-resolution adds at most one clause per variable and head");
  if (d.empty()) fail(ErrorKind::UniqueModel, "formula has a unique model");

  std::vector<std::vector<char>> imp(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<int> vars;
  for (const HC& h : d)
    if (h.neg.size() == 1 && h.pos >= 0) imp[static_cast<std::size_t>(h.neg[0])][static_cast<std::size_t>(h.pos)] = 1;
  for (int v = 0; v < n; ++v)
    if (fixed[static_cast<std::size_t>(v)] < 0) vars.push_back(v);
  auto I = [&](int a, int b) { return imp[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; };
  auto same = [&](int a, int b) { return I(a, b) && I(b, a); };
  // z depends on y1..yk: (¬y1 ∨ ... ∨ ¬yk ∨ z) with z implying every yi and
  // equivalent to none.
  std::vector<char> dependent(static_cast<std::size_t>(n), 0);
  for (const HC& h : d) {
    if (h.pos < 0 || h.neg.empty()) continue;
    bool dep = true;
    for (int y : h.neg) dep = dep && I(h.pos, y) && !same(h.pos, y);
    if (dep) dependent[static_cast<std::size_t>(h.pos)] = 1;
  }
  std::vector<int> pivot;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int a : vars) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    std::vector<int> cls;
    bool ok = true;
    for (int b : vars)
      if (same(a, b)) {
        cls.push_back(b);
        seen[static_cast<std::size_t>(b)] = 1;
        ok = ok && !dependent[static_cast<std::size_t>(b)];
      }
    if (ok && (pivot.empty() || cls.size() < pivot.size())) pivot = cls;
  }
  ensure(!pivot.empty(), "some class has no dependent variable");

  Assignment m1(static_cast<std::size_t>(n), 0), m2;
  for (int y : vars) {
    bool in_x = std::find(pivot.begin(), pivot.end(), y) != pivot.end();
    bool above = false;
    for (int x : pivot) above = above || I(x, y);
    if (!in_x && above) m1[static_cast<std::size_t>(y)] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (fixed[static_cast<std::size_t>(v)] >= 0) m1[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(fixed[static_cast<std::size_t>(v)]);
  m2 = m1;
  for (int x : pivot) m2[static_cast<std::size_t>(x)] = 1;
  ensure(satisfies(phi, m1) && satisfies(phi, m2), "Horn MSD witnesses are models");
  return detail::pair_outcome(std::move(m1), std::move(m2), Guarantee::exact(), "horn_hyperres");
}

/// Horn procedure on the dual formula.
inline SolveOutcome msd_dual_horn(const Formula& phi) {
  auto r = msd_horn(dualize_formula(phi));
  r.witness = complement(r.witness);
  r.witness2 = complement(*r.witness2);
  r.route = "dual_horn_hyperres";
  return r;
}

/// Exact MSD for affine formulas: a particular solution p and p + v for a
/// minimum-weight nonzero v of the homogeneous space.
inline SolveOutcome msd_affine(const Formula& phi, int cap = 24) {
  const int n = phi.var_count();
  auto sol = gf2::solve_affine(parity_system(n, formula_clauses(phi, {Shape::Parity})));
  if (!sol) fail(ErrorKind::Unsatisfiable, "formula has no model");
  auto v = gf2::min_weight_nonzero(sol->nullspace, static_cast<std::size_t>(cap));
  if (!v) fail(ErrorKind::UniqueModel, "formula has a unique model");
  Assignment a = to_assignment(sol->particular), b = to_assignment(sol->particular ^ v->second);
  ensure(satisfies(phi, a) && satisfies(phi, b), "affine MSD witnesses are models");
  return detail::pair_outcome(std::move(a), std::move(b), Guarantee::exact(), "affine_mindist");
}

/// n-approximation: any two distinct models.
inline SolveOutcome msd_napprox(const Formula& phi, int cap = 24) {
  auto p = tssat(phi, cap);
  if (!p) {
    if (!sat_solve(phi, cap)) fail(ErrorKind::Unsatisfiable, "formula has no model");
    fail(ErrorKind::UniqueModel, "formula has a unique model");
  }
  return detail::pair_outcome(std::move(p->first), std::move(p->second), Guarantee::n_approx(), "tssat_napprox");
}

/// Exact MSD by enumeration under the cap.
inline SolveOutcome msd_exhaustive(const Formula& phi, int cap = 24) {
  try {
    auto r = oracle_optimize(Problem::MSD, phi, std::nullopt, cap);
    r.route = "exhaustive_fallback";
    return r;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoSecondModel) fail(ErrorKind::UniqueModel, "formula has a unique model");
    throw;
  }
}

inline SolveOutcome solve_msd(const Formula& phi, const SolverOptions& opt = {}) {
  const Verdict v = verdict(classify(phi.used_language()), Problem::MSD);
  const int cap = opt.cap;
  SolveOutcome out;
  if (v.tag == "horn_hyperres") out = msd_horn(phi);
  else if (v.tag == "dual_horn_hyperres") out = msd_dual_horn(phi);
  else if (v.tag == "bijunctive_closure") out = msd_bijunctive(phi);
  else if (v.tag == "affine_mindist") out = opt.mode == Mode::Approx ? msd_napprox(phi, cap) : msd_affine(phi, cap);
  else if (v.tag == "tssat_napprox") out = opt.mode == Mode::Exact ? msd_exhaustive(phi, cap) : msd_napprox(phi, cap);
  else {
    if (opt.mode == Mode::Approx) fail(ErrorKind::NoPolyAlgorithm, "MSD is NPO-complete for this language");
    out = msd_exhaustive(phi, cap);
  }
  ensure(out.witness2.has_value() && out.witness != *out.witness2, "MSD witnesses are distinct");
  ensure(satisfies(phi, out.witness) && satisfies(phi, *out.witness2), "MSD witnesses satisfy the formula");
  ensure(out.value == hamming(out.witness, *out.witness2), "MSD value matches the witnesses");
  out.verdict = v;
  return out;
}

}  // namespace boolhd
