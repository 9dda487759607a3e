#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "boolhd/formula.hpp"
#include "boolhd/relations.hpp"

namespace boolhd {

/// cnf_decompose memoized per (relation, shape).
inline const std::vector<Clause>& cached_decompose(const Relation& r, ShapeSpec s) {
  using Key = std::tuple<int, int, std::vector<TupleCode>>;
  static std::mutex mu;
  static std::map<Key, std::optional<std::vector<Clause>>> memo;
  std::vector<TupleCode> ts{static_cast<TupleCode>(r.arity())};
  ts.insert(ts.end(), r.tuples().begin(), r.tuples().end());
  Key key{static_cast<int>(s.shape), s.k, std::move(ts)};
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) {
      if (!it->second) fail(ErrorKind::ShapeUnavailable, "relation does not admit the requested clause shape");
      return *it->second;
    }
  }
  std::optional<std::vector<Clause>> value;
  try {
    value = cnf_decompose(r, s);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ShapeUnavailable) throw;
  }
  std::lock_guard lock(mu);
  auto& slot = memo.emplace(std::move(key), std::move(value)).first->second;
  if (!slot) fail(ErrorKind::ShapeUnavailable, "relation does not admit the requested clause shape");
  return *slot;
}

/// Clauses of the whole formula in the requested shape, over formula
/// variables. Tautologies are dropped and duplicates removed.
inline std::vector<Clause> formula_clauses(const Formula& phi, ShapeSpec s) {
  std::set<Clause> acc;
  for (const auto& atom : phi.atoms()) {
    for (const Clause& c : cached_decompose(phi.relation_of(atom), s)) {
      auto map = [&](const std::vector<int>& xs) {
        std::vector<int> out;
        for (int x : xs) out.push_back(atom.vars[static_cast<std::size_t>(x)]);
        return out;
      };
      Clause mapped = c.kind == ClauseKind::Parity ? Clause::equation(map(c.positives), c.parity)
                                                   : Clause::make(map(c.positives), map(c.negatives));
      if (mapped.kind == ClauseKind::Parity && mapped.positives.empty() && !mapped.parity) continue;
      if (!mapped.is_tautology()) acc.insert(std::move(mapped));
    }
  }
  return {acc.begin(), acc.end()};
}

inline bool clauses_satisfied(const std::vector<Clause>& cs, const Assignment& m) {
  auto val = [&](int v) { return static_cast<int>(m[static_cast<std::size_t>(v)]); };
  return std::all_of(cs.begin(), cs.end(), [&](const Clause& c) { return c.satisfied_by(val); });
}

/// Unit propagation over a CNF with an undo trail. Values are -1 (unset), 0, 1.
class Propagator {
 public:
  Propagator(int n, const std::vector<Clause>& clauses) : cs_(clauses), val_(static_cast<std::size_t>(n), -1) {
    occ_.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < cs_.size(); ++i) {
      for (int v : cs_[i].positives) occ_[static_cast<std::size_t>(v)].push_back(i);
      for (int v : cs_[i].negatives) occ_[static_cast<std::size_t>(v)].push_back(i);
    }
  }

  const std::vector<std::int8_t>& values() const noexcept { return val_; }

  /// Propagates unit and empty clauses of the input. False on conflict.
  bool start() {
    std::vector<std::size_t> queue_start;
    for (std::size_t i = 0; i < cs_.size(); ++i) queue_start.push_back(i);
    return run(queue_start);
  }

  /// Sets `var := value` and propagates; on conflict restores the previous
  /// state and returns false.
  bool assign(int var, int value) {
    const auto mark = trail_.size();
    if (val_[static_cast<std::size_t>(var)] >= 0) return val_[static_cast<std::size_t>(var)] == value;
    set(var, value);
    if (run(occ_[static_cast<std::size_t>(var)])) return true;
    undo(mark);
    return false;
  }

 private:
  void set(int var, int value) {
    val_[static_cast<std::size_t>(var)] = static_cast<std::int8_t>(value);
    trail_.push_back(var);
  }
  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      val_[static_cast<std::size_t>(trail_.back())] = -1;
      trail_.pop_back();
    }
  }

  bool run(const std::vector<std::size_t>& initial) {
    std::vector<std::size_t> work(initial.begin(), initial.end());
    while (!work.empty()) {
      const Clause& c = cs_[work.back()];
      work.pop_back();
      int unset = 0, lit_var = -1, lit_val = 0;
      bool sat = false;
      for (int v : c.positives) {
        auto x = val_[static_cast<std::size_t>(v)];
        if (x == 1) sat = true;
        else if (x < 0) ++unset, lit_var = v, lit_val = 1;
      }
      for (int v : c.negatives) {
        auto x = val_[static_cast<std::size_t>(v)];
        if (x == 0) sat = true;
        else if (x < 0) ++unset, lit_var = v, lit_val = 0;
      }
      if (sat) continue;
      if (unset == 0) return false;
      if (unset == 1) {
        set(lit_var, lit_val);
        const auto& o = occ_[static_cast<std::size_t>(lit_var)];
        work.insert(work.end(), o.begin(), o.end());
      }
    }
    return true;
  }

  const std::vector<Clause>& cs_;
  std::vector<std::int8_t> val_;
  std::vector<std::vector<std::size_t>> occ_;
  std::vector<int> trail_;
};

/// Minimal model of a Horn CNF, or nullopt if unsatisfiable.
inline std::optional<Assignment> horn_min_model(int n, const std::vector<Clause>& clauses) {
  Propagator p(n, clauses);
  if (!p.start()) return std::nullopt;
  Assignment m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = p.values()[static_cast<std::size_t>(i)] == 1;
  ensure(clauses_satisfied(clauses, m), "Horn minimal model satisfies its clauses");
  return m;
}

/// Maximal model of a dual Horn CNF.
inline std::optional<Assignment> dual_horn_max_model(int n, const std::vector<Clause>& clauses) {
  Propagator p(n, clauses);
  if (!p.start()) return std::nullopt;
  Assignment m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = p.values()[static_cast<std::size_t>(i)] != 0;
  ensure(clauses_satisfied(clauses, m), "dual Horn maximal model satisfies its clauses");
  return m;
}

/// 2-SAT via strongly connected components of the implication graph.
/// Literal 2v is x_v, 2v+1 is ¬x_v.
inline std::optional<Assignment> two_sat(int n, const std::vector<Clause>& clauses) {
  const int N = 2 * n;
  std::vector<std::vector<int>> g(static_cast<std::size_t>(N)), rg(static_cast<std::size_t>(N));
  auto lit = [](int v, bool positive) { return 2 * v + (positive ? 0 : 1); };
  auto edge = [&](int a, int b) {
    g[static_cast<std::size_t>(a)].push_back(b);
    rg[static_cast<std::size_t>(b)].push_back(a);
  };
  for (const Clause& c : clauses) {
    std::vector<int> lits;
    for (int v : c.positives) lits.push_back(lit(v, true));
    for (int v : c.negatives) lits.push_back(lit(v, false));
    ensure(lits.size() <= 2, "two_sat expects clauses of width at most two");
    if (lits.empty()) return std::nullopt;
    if (lits.size() == 1) edge(lits[0] ^ 1, lits[0]);
    else {
      edge(lits[0] ^ 1, lits[1]);
      edge(lits[1] ^ 1, lits[0]);
    }
  }
  // Kosaraju, iterative.
  std::vector<int> order;
  std::vector<bool> seen(static_cast<std::size_t>(N), false);
  for (int s = 0; s < N; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<std::pair<int, std::size_t>> st{{s, 0}};
    seen[static_cast<std::size_t>(s)] = true;
    while (!st.empty()) {
      auto& [u, i] = st.back();
      if (i < g[static_cast<std::size_t>(u)].size()) {
        int w = g[static_cast<std::size_t>(u)][i++];
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          st.push_back({w, 0});
        }
      } else {
        order.push_back(u);
        st.pop_back();
      }
    }
  }
  std::vector<int> comp(static_cast<std::size_t>(N), -1);
  int nc = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[static_cast<std::size_t>(*it)] >= 0) continue;
    std::vector<int> st{*it};
    comp[static_cast<std::size_t>(*it)] = nc;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      for (int w : rg[static_cast<std::size_t>(u)])
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = nc;
          st.push_back(w);
        }
    }
    ++nc;
  }
  // Components are numbered in topological order of the condensation.
  Assignment m(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    int cp = comp[static_cast<std::size_t>(lit(v, true))], cn = comp[static_cast<std::size_t>(lit(v, false))];
    if (cp == cn) return std::nullopt;
    m[static_cast<std::size_t>(v)] = cp > cn;
  }
  ensure(clauses_satisfied(clauses, m), "2-SAT model satisfies its clauses");
  return m;
}

/// Extends a partial assignment of a satisfiable 2-CNF greedily: each unset
/// variable in index order takes its preferred value when propagation allows,
/// otherwise the opposite one.
inline std::optional<Assignment> two_sat_extend(int n, const std::vector<Clause>& clauses,
                                                const std::vector<std::int8_t>& fixed, const Assignment& prefer) {
  Propagator p(n, clauses);
  if (!p.start()) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (fixed[static_cast<std::size_t>(v)] >= 0 && !p.assign(v, fixed[static_cast<std::size_t>(v)])) return std::nullopt;
  for (int v = 0; v < n; ++v) {
    if (p.values()[static_cast<std::size_t>(v)] >= 0) continue;
    if (!p.assign(v, prefer[static_cast<std::size_t>(v)]) && !p.assign(v, 1 - prefer[static_cast<std::size_t>(v)]))
      return std::nullopt;
  }
  Assignment m(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) m[static_cast<std::size_t>(v)] = p.values()[static_cast<std::size_t>(v)] == 1;
  if (!clauses_satisfied(clauses, m)) return std::nullopt;
  return m;
}

}  // namespace boolhd
