#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "boolhd/error.hpp"

namespace boolhd {

using Rational = boost::multiprecision::cpp_rational;

enum class Sense { Le, Ge, Eq };

struct LpConstraint {
  std::vector<std::pair<int, std::int64_t>> terms;  // (variable, coefficient)
  Sense sense = Sense::Le;
  Rational rhs = 0;
};

/// Minimize objective·x subject to the constraints and 0 <= x <= 1.
struct LpProblem {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LpConstraint> constraints;

  explicit LpProblem(int n = 0) : num_vars(n), objective(static_cast<std::size_t>(n), 0) {}

  LpProblem& add(std::vector<std::pair<int, std::int64_t>> terms, Sense s, Rational rhs) {
    for (auto& [v, c] : terms)
      if (v < 0 || v >= num_vars) fail(ErrorKind::Internal, "LP variable out of range");
    constraints.push_back({std::move(terms), s, std::move(rhs)});
    return *this;
  }
};

struct LpSolution {
  Rational value;
  std::vector<Rational> x;
};

namespace detail {

class Tableau {
 public:
  // rows: constraint coefficients over `cols` columns plus rhs in the last slot
  std::vector<std::vector<Rational>> a;
  std::vector<int> basis;
  std::vector<Rational> d;  // reduced costs, last slot holds -z
  int cols = 0;

  void pivot(std::size_t r, int c) {
    const Rational p = a[r][static_cast<std::size_t>(c)];
    for (auto& v : a[r]) v /= p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r) continue;
      const Rational f = a[i][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (std::size_t j = 0; j < a[i].size(); ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
    }
    const Rational f = d[static_cast<std::size_t>(c)];
    if (f != 0)
      for (std::size_t j = 0; j < d.size(); ++j)
        if (a[r][j] != 0) d[j] -= f * a[r][j];
    basis[r] = c;
  }

  void set_objective(const std::vector<Rational>& c) {
    d.assign(static_cast<std::size_t>(cols) + 1, 0);
    for (int j = 0; j < cols; ++j) d[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Rational cb = c[static_cast<std::size_t>(basis[i])];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < d.size(); ++j) d[j] -= cb * a[i][j];
    }
  }

  // Bland's rule: lowest-index entering column, lowest basic index on ratio ties.
  bool optimize(const std::vector<bool>& allowed) {
    const auto rhs = static_cast<std::size_t>(cols);
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols; ++j)
        if (allowed[static_cast<std::size_t>(j)] && d[static_cast<std::size_t>(j)] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const Rational& coef = a[i][static_cast<std::size_t>(enter)];
        if (coef <= 0) continue;
        Rational ratio = a[i][rhs] / coef;
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;  // unbounded
      pivot(*leave, enter);
    }
  }
};

}  // namespace detail

/// Exact two-phase simplex. Returns nullopt iff the problem is infeasible.
inline std::optional<LpSolution> lp_solve(const LpProblem& p) {
  const int n = p.num_vars;
  // Rows: user constraints, then x_j <= 1.
  struct Row {
    std::vector<Rational> coef;
    Sense sense;
    Rational rhs;
  };
  std::vector<Row> rows;
  for (const auto& c : p.constraints) {
    Row r{std::vector<Rational>(static_cast<std::size_t>(n), 0), c.sense, c.rhs};
    for (auto [v, k] : c.terms) r.coef[static_cast<std::size_t>(v)] += k;
    rows.push_back(std::move(r));
  }
  for (int j = 0; j < n; ++j) {
    Row r{std::vector<Rational>(static_cast<std::size_t>(n), 0), Sense::Le, 1};
    r.coef[static_cast<std::size_t>(j)] = 1;
    rows.push_back(std::move(r));
  }
  for (auto& r : rows)
    if (r.rhs < 0) {
      for (auto& v : r.coef) v = -v;
      r.rhs = -r.rhs;
      if (r.sense != Sense::Eq) r.sense = r.sense == Sense::Le ? Sense::Ge : Sense::Le;
    }
  int slacks = 0, artificials = 0;
  for (auto& r : rows) {
    if (r.sense != Sense::Eq) ++slacks;
    if (r.sense != Sense::Le) ++artificials;
  }
  detail::Tableau t;
  t.cols = n + slacks + artificials;
  const int art_start = n + slacks;
  int next_slack = n, next_art = art_start;
  for (auto& r : rows) {
    std::vector<Rational> row(static_cast<std::size_t>(t.cols) + 1, 0);
    for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = r.coef[static_cast<std::size_t>(j)];
    row.back() = r.rhs;
    int basic = -1;
    if (r.sense == Sense::Le) {
      row[static_cast<std::size_t>(next_slack)] = 1;
      basic = next_slack++;
    } else if (r.sense == Sense::Ge) {
      row[static_cast<std::size_t>(next_slack++)] = -1;
      row[static_cast<std::size_t>(next_art)] = 1;
      basic = next_art++;
    } else {
      row[static_cast<std::size_t>(next_art)] = 1;
      basic = next_art++;
    }
    t.a.push_back(std::move(row));
    t.basis.push_back(basic);
  }
  std::vector<bool> allowed(static_cast<std::size_t>(t.cols), true);
  if (artificials > 0) {
    std::vector<Rational> c1(static_cast<std::size_t>(t.cols), 0);
    for (int j = art_start; j < t.cols; ++j) c1[static_cast<std::size_t>(j)] = 1;
    t.set_objective(c1);
    ensure(t.optimize(allowed), "phase one is bounded");
    if (t.d.back() != 0) return std::nullopt;
    // Drive remaining artificial variables out of the basis.
    for (std::size_t i = 0; i < t.a.size();) {
      if (t.basis[i] < art_start) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < art_start; ++j)
        if (t.a[i][static_cast<std::size_t>(j)] != 0) {
          col = j;
          break;
        }
      if (col >= 0) {
        t.pivot(i, col);
        ++i;
      } else {
        t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (int j = art_start; j < t.cols; ++j) allowed[static_cast<std::size_t>(j)] = false;
  }
  std::vector<Rational> c2(static_cast<std::size_t>(t.cols), 0);
  for (int j = 0; j < n; ++j) c2[static_cast<std::size_t>(j)] = p.objective[static_cast<std::size_t>(j)];
  t.set_objective(c2);
  ensure(t.optimize(allowed), "bounded LP cannot be unbounded");
  LpSolution out;
  out.x.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < t.a.size(); ++i)
    if (t.basis[i] < n) out.x[static_cast<std::size_t>(t.basis[i])] = t.a[i].back();
  out.value = 0;
  for (int j = 0; j < n; ++j) out.value += p.objective[static_cast<std::size_t>(j)] * out.x[static_cast<std::size_t>(j)];
  return out;
}

}  // namespace boolhd
