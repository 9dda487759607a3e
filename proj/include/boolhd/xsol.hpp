#pragma once

#include <optional>
#include <vector>

#include "boolhd/clausal.hpp"
#include "boolhd/decision.hpp"
#include "boolhd/gf2.hpp"
#include "boolhd/nsol.hpp"

namespace boolhd {

namespace detail {
inline void keep_closest(std::optional<Assignment>& best, Assignment cand, const Assignment& m) {
  if (closer(cand, best, m)) best = std::move(cand);
}

inline SolveOutcome next_outcome(const Assignment& m, const std::optional<Assignment>& best, Guarantee g,
                                 std::string route) {
  if (!best) fail(ErrorKind::NoSecondModel, "the input is the only model");
  return outcome(m, *best, g, std::move(route));
}
}  // namespace detail

/// Exact XSOL for bijunctive formulas: flip one variable, then repair each
/// falsified clause by flipping its other variable; a variable never flips
/// twice.
inline SolveOutcome xsol_bijunctive(const Formula& phi, const Assignment& m) {
  check_length(phi, m);
  detail::require_model(phi, m);
  const int n = phi.var_count();
  const auto clauses = formula_clauses(phi, {Shape::Bijunctive});
  std::vector<std::vector<std::size_t>> occ(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    for (int v : clauses[i].positives) occ[static_cast<std::size_t>(v)].push_back(i);
    for (int v : clauses[i].negatives) occ[static_cast<std::size_t>(v)].push_back(i);
  }
  std::optional<Assignment> best;
  for (int x = 0; x < n; ++x) {
    Assignment w = m;
    std::vector<bool> flipped(static_cast<std::size_t>(n), false);
    std::vector<int> queue{x};
    flipped[static_cast<std::size_t>(x)] = true;
    w[static_cast<std::size_t>(x)] ^= 1u;
    bool ok = true;
    auto val = [&](int v) { return static_cast<int>(w[static_cast<std::size_t>(v)]); };
    while (ok && !queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (std::size_t ci : occ[static_cast<std::size_t>(v)]) {
        const Clause& c = clauses[ci];
        if (c.satisfied_by(val)) continue;
        int other = -1;
        for (int u : c.positives)
          if (!flipped[static_cast<std::size_t>(u)]) other = u;
        for (int u : c.negatives)
          if (!flipped[static_cast<std::size_t>(u)]) other = u;
        if (other < 0) {
          ok = false;
          break;
        }
        flipped[static_cast<std::size_t>(other)] = true;
        w[static_cast<std::size_t>(other)] ^= 1u;
        queue.push_back(other);
      }
    }
    if (ok) {
      ensure(satisfies(phi, w), "flip closure yields a model");
      detail::keep_closest(best, std::move(w), m);
    }
  }
  return detail::next_outcome(m, best, Guarantee::exact(), "bijunctive_flip");
}

/// Exact XSOL for formulas of positive clauses, implications and units:
/// raise one variable and close forward, or lower one and close backward.
/// The negative counterpart runs on the dual formula.
inline SolveOutcome xsol_ihsb(const Formula& phi, const Assignment& m) {
  check_length(phi, m);
  detail::require_model(phi, m);
  const int n = phi.var_count();
  std::vector<Clause> clauses;
  try {
    clauses = formula_clauses(phi, {Shape::IhsbPos, 0});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ShapeUnavailable) throw;
    auto r = xsol_ihsb(dualize_formula(phi), complement(m));
    r.witness = complement(r.witness);
    return r;
  }
  std::vector<std::vector<int>> fwd(static_cast<std::size_t>(n)), bwd(static_cast<std::size_t>(n));
  for (const Clause& c : clauses)
    if (c.kind == ClauseKind::Impl) {
      fwd[static_cast<std::size_t>(c.negatives[0])].push_back(c.positives[0]);
      bwd[static_cast<std::size_t>(c.positives[0])].push_back(c.negatives[0]);
    }
  std::optional<Assignment> best;
  for (int x = 0; x < n; ++x) {
    const std::uint8_t target = m[static_cast<std::size_t>(x)] ^ 1u;
    const auto& edges = target ? fwd : bwd;
    Assignment w = m;
    std::vector<int> stack{x};
    w[static_cast<std::size_t>(x)] = target;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : edges[static_cast<std::size_t>(v)])
        if (w[static_cast<std::size_t>(u)] != target) {
          w[static_cast<std::size_t>(u)] = target;
          stack.push_back(u);
        }
    }
    if (clauses_satisfied(clauses, w)) detail::keep_closest(best, std::move(w), m);
  }
  return detail::next_outcome(m, best, Guarantee::exact(), "ihsb_closure");
}

/// Exact XSOL for affine formulas: m plus a minimum-weight nonzero vector of
/// the homogeneous solution space.
inline SolveOutcome xsol_affine(const Formula& phi, const Assignment& m, int cap = 24) {
  check_length(phi, m);
  detail::require_model(phi, m);
  const int n = phi.var_count();
  auto sol = gf2::solve_affine(parity_system(n, formula_clauses(phi, {Shape::Parity})));
  ensure(sol.has_value(), "a formula with a model has a consistent parity system");
  auto v = gf2::min_weight_nonzero(sol->nullspace, static_cast<std::size_t>(cap));
  if (!v) fail(ErrorKind::NoSecondModel, "the input is the only model");
  auto w = to_assignment(to_bitvec(m) ^ v->second);
  ensure(satisfies(phi, w), "affine next solution satisfies the formula");
  return detail::outcome(m, std::move(w), Guarantee::exact(), "affine_mindist");
}

/// XSOL through NSOL calls on φ ∧ (x = 1 - m(x)) for every variable x.
inline SolveOutcome xsol_horn_turing(const Formula& phi, const Assignment& m, const SolverOptions& opt = {}) {
  check_length(phi, m);
  detail::require_model(phi, m);
  const int n = phi.var_count();
  SolverOptions inner = opt;
  inner.mode = (opt.mode != Mode::Approx && n <= opt.cap) ? Mode::Exact : Mode::Approx;
  std::optional<SolveOutcome> best;
  Guarantee g = Guarantee::exact();
  for (int x = 0; x < n; ++x) {
    Formula fx = phi;
    fx.add(m[static_cast<std::size_t>(x)] ? "f" : "t", {x});
    try {
      SolveOutcome r = solve_nsol(fx, m, inner);
      g = Guarantee::worst(g, r.guarantee);
      if (!best || detail::better(r, *best)) best = std::move(r);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Unsatisfiable) throw;
    }
  }
  if (!best) fail(ErrorKind::NoSecondModel, "the input is the only model");
  return detail::outcome(m, best->witness, g, "horn_turing");
}

/// n-approximation from the decision procedure for another model.
inline SolveOutcome xsol_anothersat_napprox(const Formula& phi, const Assignment& m, int cap = 24) {
  auto w = another_sat(phi, m, cap);
  return detail::next_outcome(m, w, Guarantee::n_approx(), "anothersat_napprox");
}

/// Exact XSOL by branch and bound; refuses above the cap.
inline SolveOutcome xsol_exhaustive(const Formula& phi, const Assignment& m, int cap = 24) {
  check_length(phi, m);
  detail::require_model(phi, m);
  auto w = detail::branch_and_bound(phi, m, cap, &m);
  return detail::next_outcome(m, w, Guarantee::exact(), "exhaustive_fallback");
}

inline SolveOutcome solve_xsol(const Formula& phi, const Assignment& m, const SolverOptions& opt = {}) {
  check_length(phi, m);
  detail::require_model(phi, m);
  const Verdict v = verdict(classify(phi.used_language()), Problem::XSOL);
  const int cap = opt.cap;
  auto napprox = [&] {
    return detail::best_with_dual(phi, m, [cap](const Formula& f, const Assignment& a) { return xsol_anothersat_napprox(f, a, cap); });
  };
  SolveOutcome out;
  if (v.tag == "ihsb_closure") out = xsol_ihsb(phi, m);
  else if (v.tag == "bijunctive_flip") out = xsol_bijunctive(phi, m);
  else if (v.tag == "affine_mindist") out = opt.mode == Mode::Approx ? napprox() : xsol_affine(phi, m, cap);
  else if (v.tag == "horn_turing") out = xsol_horn_turing(phi, m, opt);
  else if (v.tag == "anothersat_napprox") out = opt.mode == Mode::Exact ? xsol_exhaustive(phi, m, cap) : napprox();
  else {
    if (opt.mode == Mode::Approx) fail(ErrorKind::NoPolyAlgorithm, "XSOL is NPO-complete for this language");
    out = xsol_exhaustive(phi, m, cap);
  }
  ensure(out.witness != m, "XSOL witness differs from the input");
  ensure(satisfies(phi, out.witness), "XSOL witness satisfies the formula");
  ensure(out.value == hamming(m, out.witness), "XSOL value matches the witness");
  out.verdict = v;
  return out;
}

}  // namespace boolhd
