#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "boolhd/clausal.hpp"
#include "boolhd/decision.hpp"
#include "boolhd/formula.hpp"
#include "boolhd/gf2.hpp"
#include "boolhd/lp.hpp"
#include "boolhd/maxflow.hpp"
#include "boolhd/postlattice.hpp"

namespace boolhd {

namespace detail {

inline SolveOutcome outcome(const Assignment& m, Assignment witness, Guarantee g, std::string route) {
  SolveOutcome o;
  o.value = hamming(m, witness);
  o.witness = std::move(witness);
  o.guarantee = g;
  o.route = std::move(route);
  return o;
}

inline bool better(const SolveOutcome& a, const SolveOutcome& b) {
  return a.value < b.value || (a.value == b.value && a.witness < b.witness);
}

/// Runs `algo` on (φ, m) and on the dual instance (dual φ, complement m) and
/// keeps the better result, mapped back. Makes approximate values invariant
/// under duality.
inline SolveOutcome best_with_dual(const Formula& phi, const Assignment& m,
                                   const std::function<SolveOutcome(const Formula&, const Assignment&)>& algo) {
  SolveOutcome a = algo(phi, m);
  SolveOutcome b = algo(dualize_formula(phi), complement(m));
  b.witness = complement(b.witness);
  if (b.witness2) b.witness2 = complement(*b.witness2);
  return better(b, a) ? b : a;
}

inline bool is_unit_relation(const Relation& r) {
  return r.arity() == 1;
}

/// Relations used by φ other than unary ones, which NSOL absorbs.
inline std::vector<Relation> non_unit_language(const Formula& phi) {
  std::vector<Relation> out;
  for (auto i : phi.used_relations())
    if (!is_unit_relation(phi.language().relation(i))) out.push_back(phi.language().relation(i));
  return out;
}

/// Depth-first search in lexicographic order with distance pruning. With
/// `exclude` set, that assignment is skipped (next-solution search).
inline std::optional<Assignment> branch_and_bound(const Formula& phi, const Assignment& m, int cap,
                                                  const Assignment* exclude = nullptr) {
  check_cap(phi, cap);
  const int n = phi.var_count();
  std::vector<std::vector<const Atom*>> due(static_cast<std::size_t>(n));
  for (const auto& a : phi.atoms())
    due[static_cast<std::size_t>(*std::max_element(a.vars.begin(), a.vars.end()))].push_back(&a);
  Assignment cur(static_cast<std::size_t>(n), 0);
  std::optional<Assignment> best;
  int bound = n;
  auto rec = [&](auto& self, int i, int dist) -> void {
    if (dist > bound) return;
    if (i == n) {
      if (exclude && cur == *exclude) return;
      best = cur;
      bound = dist - 1;
      return;
    }
    for (std::uint8_t b = 0; b < 2; ++b) {
      cur[static_cast<std::size_t>(i)] = b;
      bool ok = true;
      for (const Atom* a : due[static_cast<std::size_t>(i)])
        if (!(ok = phi.relation_of(*a).contains(phi.atom_tuple(*a, cur)))) break;
      if (ok) self(self, i + 1, dist + (b != m[static_cast<std::size_t>(i)]));
    }
    cur[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, 0);
  return best;
}

inline std::vector<std::pair<int, std::int64_t>> clause_terms(const Clause& c, int& negs) {
  std::vector<std::pair<int, std::int64_t>> t;
  for (int v : c.positives) t.emplace_back(v, 1);
  for (int v : c.negatives) t.emplace_back(v, -1);
  negs = static_cast<int>(c.negatives.size());
  return t;
}

/// LP relaxation of a clause list: each clause becomes "sum of literal
/// values >= 1", units become equalities; objective is the Hamming distance
/// to m up to a constant.
inline LpProblem clause_relaxation(int n, const std::vector<Clause>& clauses, const Assignment& m) {
  LpProblem lp(n);
  for (int j = 0; j < n; ++j) lp.objective[static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j)] ? -1 : 1;
  for (const Clause& c : clauses) {
    int negs = 0;
    auto terms = clause_terms(c, negs);
    if (c.kind == ClauseKind::UnitPos) lp.add(terms, Sense::Eq, 1);
    else if (c.kind == ClauseKind::UnitNeg) lp.add({{c.negatives[0], 1}}, Sense::Eq, 0);
    else lp.add(terms, Sense::Ge, 1 - negs);
  }
  return lp;
}

}  // namespace detail

/// Exact NSOL for 2-affine formulas: parity union-find over x = c and
/// x + y = c, then per component the orientation closer to m.
inline SolveOutcome nsol_2affine(const Formula& phi, const Assignment& m) {
  check_length(phi, m);
  const int n = phi.var_count();
  const auto eqs = formula_clauses(phi, {Shape::Parity});
  // node n is the constant 0
  std::vector<int> parent(static_cast<std::size_t>(n) + 1), par(static_cast<std::size_t>(n) + 1, 0);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::pair<int, int>(int)> find = [&](int x) -> std::pair<int, int> {
    if (parent[static_cast<std::size_t>(x)] == x) return {x, 0};
    auto [r, p] = find(parent[static_cast<std::size_t>(x)]);
    parent[static_cast<std::size_t>(x)] = r;
    par[static_cast<std::size_t>(x)] ^= p;
    return {r, par[static_cast<std::size_t>(x)]};
  };
  auto unite = [&](int a, int b, int c) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) != c) fail(ErrorKind::Unsatisfiable, "parity constraints are inconsistent");
      return;
    }
    if (rb == n) std::swap(ra, rb), std::swap(pa, pb);  // keep the constant as a root
    parent[static_cast<std::size_t>(rb)] = ra;
    par[static_cast<std::size_t>(rb)] = pa ^ pb ^ c;
  };
  for (const Clause& e : eqs) {
    ensure(e.positives.size() <= 2, "2-affine equations have at most two variables");
    if (e.positives.empty()) fail(ErrorKind::Unsatisfiable, "parity constraints are inconsistent");
    if (e.positives.size() == 1) unite(e.positives[0], n, e.parity);
    else unite(e.positives[0], e.positives[1], e.parity);
  }
  // per root: cost of orientation "root = 0" and the minimum member index
  std::vector<int> cost0(static_cast<std::size_t>(n) + 1, 0), size(static_cast<std::size_t>(n) + 1, 0),
      first(static_cast<std::size_t>(n) + 1, -1);
  for (int x = 0; x < n; ++x) {
    auto [r, p] = find(x);
    cost0[static_cast<std::size_t>(r)] += (p != m[static_cast<std::size_t>(x)]);
    ++size[static_cast<std::size_t>(r)];
    if (first[static_cast<std::size_t>(r)] < 0) first[static_cast<std::size_t>(r)] = x;
  }
  Assignment w(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    auto [r, p] = find(x);
    int root_val = 0;
    if (r != n) {
      const int c0 = cost0[static_cast<std::size_t>(r)], c1 = size[static_cast<std::size_t>(r)] - c0;
      if (c1 < c0) root_val = 1;
      else if (c1 == c0) root_val = find(first[static_cast<std::size_t>(r)]).second;  // makes the first member 0
    }
    w[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(p ^ root_val);
  }
  ensure(satisfies(phi, w), "2-affine witness satisfies the formula");
  return detail::outcome(m, std::move(w), Guarantee::exact(), "2affine_exact");
}

/// Exact NSOL for monotone formulas as a minimum s-t cut; the source side is
/// the set of variables assigned 1.
inline SolveOutcome nsol_monotone(const Formula& phi, const Assignment& m) {
  check_length(phi, m);
  const int n = phi.var_count();
  const auto clauses = formula_clauses(phi, {Shape::Monotone});
  Propagator prop(n, clauses);
  if (!prop.start()) fail(ErrorKind::Unsatisfiable, "unit propagation conflict");
  const int s = n, t = n + 1;
  MaxFlow g(n + 2);
  std::int64_t forced = 0;
  for (int x = 0; x < n; ++x) {
    const auto v = prop.values()[static_cast<std::size_t>(x)];
    const bool one = m[static_cast<std::size_t>(x)];
    if (v >= 0 && v != static_cast<int>(one)) ++forced;
    if (v == 1) g.add_edge(s, x, MaxFlow::kInf);
    else if (v == 0) g.add_edge(x, t, MaxFlow::kInf);
    else if (one) g.add_edge(s, x, 1);
    else g.add_edge(x, t, 1);
  }
  for (const Clause& c : clauses)
    if (c.kind == ClauseKind::Impl) g.add_edge(c.negatives[0], c.positives[0], MaxFlow::kInf);
  const auto flow = g.run(s, t);
  ensure(flow < MaxFlow::kInf, "propagated monotone formula is satisfiable");
  const auto side = g.source_side(s);
  Assignment w(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) w[static_cast<std::size_t>(x)] = side[static_cast<std::size_t>(x)];
  ensure(satisfies(phi, w), "min-cut witness satisfies the formula");
  ensure(hamming(m, w) == flow + forced, "cut value equals the witness distance");
  return detail::outcome(m, std::move(w), Guarantee::exact(), "monotone_mincut");
}

/// 2-approximation for bijunctive formulas: LP relaxation of the 2-CNF,
/// rounding at 1/2, and a 2-SAT repair of the fractional part if needed.
inline SolveOutcome nsol_bijunctive_2approx(const Formula& phi, const Assignment& m) {
  check_length(phi, m);
  const int n = phi.var_count();
  const auto clauses = formula_clauses(phi, {Shape::Bijunctive});
  if (!two_sat(n, clauses)) fail(ErrorKind::Unsatisfiable, "formula has no model");
  if (satisfies(phi, m)) return detail::outcome(m, m, Guarantee::ratio(2), "bijunctive_2approx");
  auto lp = lp_solve(detail::clause_relaxation(n, clauses, m));
  ensure(lp.has_value(), "LP relaxation of a satisfiable formula is feasible");
  const Rational half(1, 2);
  Assignment w(static_cast<std::size_t>(n));
  std::vector<std::int8_t> fixed(static_cast<std::size_t>(n), -1);
  for (int j = 0; j < n; ++j) {
    const Rational& x = lp->x[static_cast<std::size_t>(j)];
    w[static_cast<std::size_t>(j)] = x >= half;
    if (x == 0 || x == 1) fixed[static_cast<std::size_t>(j)] = x == 1;
  }
  if (!clauses_satisfied(clauses, w)) {
    auto repaired = two_sat_extend(n, clauses, fixed, m);
    ensure(repaired.has_value(), "integral part of the LP optimum extends to a model");
    w = *repaired;
  }
  ensure(satisfies(phi, w), "rounded witness satisfies the formula");
  return detail::outcome(m, std::move(w), Guarantee::ratio(2), "bijunctive_2approx");
}

/// l-approximation for formulas built from positive clauses of width <= l,
/// implications and units: LP relaxation rounded at 1/l. The negative
/// counterpart is solved on the dual formula.
inline SolveOutcome nsol_ihsb_rounding(const Formula& phi, const Assignment& m, int l) {
  check_length(phi, m);
  const int n = phi.var_count();
  std::vector<Clause> clauses;
  try {
    clauses = formula_clauses(phi, {Shape::IhsbPos, l});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ShapeUnavailable) throw;
    auto r = nsol_ihsb_rounding(dualize_formula(phi), complement(m), l);
    r.witness = complement(r.witness);
    return r;
  }
  if (satisfies(phi, m)) return detail::outcome(m, m, Guarantee::ratio(l), "ihsb_rounding");
  auto lp = lp_solve(detail::clause_relaxation(n, clauses, m));
  if (!lp) fail(ErrorKind::Unsatisfiable, "formula has no model");
  const Rational threshold(1, l);
  Assignment w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = lp->x[static_cast<std::size_t>(j)] >= threshold;
  ensure(satisfies(phi, w), "rounding at 1/l preserves feasibility");
  return detail::outcome(m, std::move(w), Guarantee::ratio(l), "ihsb_rounding");
}

/// n-approximation: m itself if it is a model, otherwise any model.
inline SolveOutcome nsol_feasible_napprox(const Formula& phi, const Assignment& m, int cap = 24) {
  check_length(phi, m);
  if (satisfies(phi, m)) return detail::outcome(m, m, Guarantee::n_approx(), "feasible_napprox");
  auto w = sat_solve(phi, cap);
  if (!w) fail(ErrorKind::Unsatisfiable, "formula has no model");
  return detail::outcome(m, std::move(*w), Guarantee::n_approx(), "feasible_napprox");
}

/// Exact NSOL for affine formulas: minimize the distance to m over the
/// affine solution space p + span(N).
inline SolveOutcome nsol_affine_exact(const Formula& phi, const Assignment& m, int cap = 24) {
  check_length(phi, m);
  const int n = phi.var_count();
  auto sol = gf2::solve_affine(parity_system(n, formula_clauses(phi, {Shape::Parity})));
  if (!sol) fail(ErrorKind::Unsatisfiable, "parity system is inconsistent");
  if (sol->nullspace.size() > static_cast<std::size_t>(cap))
    fail(ErrorKind::TooLarge, "solution space dimension exceeds the cap");
  const auto target = to_bitvec(m);
  gf2::BitVec cur = sol->particular;
  gf2::BitVec best = cur;
  int best_d = (cur ^ target).weight();
  const std::uint64_t total = std::uint64_t{1} << sol->nullspace.size();
  for (std::uint64_t g = 1; g < total; ++g) {
    cur ^= sol->nullspace[static_cast<std::size_t>(std::countr_zero(g))];
    const int d = (cur ^ target).weight();
    if (d < best_d || (d == best_d && cur < best)) best = cur, best_d = d;
  }
  auto w = to_assignment(best);
  ensure(satisfies(phi, w), "affine witness satisfies the formula");
  return detail::outcome(m, std::move(w), Guarantee::exact(), "affine_exact");
}

/// Exact NSOL by branch and bound; refuses above the cap.
inline SolveOutcome nsol_exhaustive(const Formula& phi, const Assignment& m, int cap = 24) {
  check_length(phi, m);
  auto w = detail::branch_and_bound(phi, m, cap);
  if (!w) fail(ErrorKind::Unsatisfiable, "formula has no model");
  return detail::outcome(m, std::move(*w), Guarantee::exact(), "exhaustive_fallback");
}

inline SolveOutcome solve_nsol(const Formula& phi, const Assignment& m, const SolverOptions& opt = {}) {
  check_length(phi, m);
  const CoCloneLabel label = classify(detail::non_unit_language(phi));
  const Verdict v = verdict(label, Problem::NSOL);
  const int cap = opt.cap;
  auto sat_poly = [&] { return verdict(classify(phi.used_language()), Problem::SAT).complexity == Complexity::P; };
  auto napprox = [&]() -> SolveOutcome {
    if (!sat_poly()) fail(ErrorKind::NoPolyAlgorithm, "no polynomial-time feasibility test for this language");
    return detail::best_with_dual(phi, m, [cap](const Formula& f, const Assignment& a) { return nsol_feasible_napprox(f, a, cap); });
  };
  SolveOutcome out;
  if (v.tag == "monotone_mincut") out = nsol_monotone(phi, m);
  else if (v.tag == "2affine_exact") out = nsol_2affine(phi, m);
  else if (opt.mode == Mode::Exact) {
    out = v.tag == "affine_exact" ? nsol_affine_exact(phi, m, cap) : nsol_exhaustive(phi, m, cap);
  } else if (v.tag == "bijunctive_2approx") {
    out = detail::best_with_dual(phi, m, [](const Formula& f, const Assignment& a) { return nsol_bijunctive_2approx(f, a); });
  } else if (v.tag == "ihsb_rounding") {
    out = detail::best_with_dual(phi, m, [&](const Formula& f, const Assignment& a) { return nsol_ihsb_rounding(f, a, label.m); });
  } else if (v.tag == "affine_exact") {
    out = opt.mode == Mode::Approx ? napprox() : nsol_affine_exact(phi, m, cap);
  } else if (v.tag == "feasible_napprox") {
    if (opt.mode == Mode::Approx || sat_poly()) out = napprox();
    else out = nsol_exhaustive(phi, m, cap);
  } else {
    if (opt.mode == Mode::Approx) fail(ErrorKind::NoPolyAlgorithm, "NSOL is NPO-complete for this language");
    out = nsol_exhaustive(phi, m, cap);
  }
  ensure(satisfies(phi, out.witness), "NSOL witness satisfies the formula");
  ensure(out.value == hamming(m, out.witness), "NSOL value matches the witness");
  out.verdict = v;
  return out;
}

}  // namespace boolhd
