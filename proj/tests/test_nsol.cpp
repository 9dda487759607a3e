#include <gtest/gtest.h>

#include "support.hpp"

using namespace boolhd;
using namespace boolhd::testing;

namespace {
ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}
}  // namespace

TEST(Lp, Examples) {
  LpProblem a(1);
  a.objective = {1};
  a.add({{0, 2}}, Sense::Ge, 1);
  auto s = lp_solve(a);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->value, Rational(1, 2));

  LpProblem b(2);
  b.objective = {1, 1};
  b.add({{0, 1}, {1, 1}}, Sense::Ge, 1);
  EXPECT_EQ(lp_solve(b)->value, 1);

  LpProblem c(1);
  c.objective = {1};
  c.add({{0, 1}}, Sense::Ge, 1).add({{0, 1}}, Sense::Le, 0);
  EXPECT_FALSE(lp_solve(c));
}

TEST(Lp, VertexCoverTriangleIsHalfIntegral) {
  LpProblem p(3);
  p.objective = {1, 1, 1};
  p.add({{0, 1}, {1, 1}}, Sense::Ge, 1).add({{1, 1}, {2, 1}}, Sense::Ge, 1).add({{0, 1}, {2, 1}}, Sense::Ge, 1);
  auto s = lp_solve(p);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->value, Rational(3, 2));
  for (const auto& x : s->x) EXPECT_EQ(x, Rational(1, 2));
}

TEST(Lp, RandomAgainstGrid) {
  // objective over 2 variables with random constraints; the optimum is at a
  // vertex, so check feasibility and compare against a fine rational grid
  std::mt19937_64 rng(61);
  for (int it = 0; it < 200; ++it) {
    LpProblem p(2);
    p.objective = {Rational(static_cast<int>(rng() % 7) - 3), Rational(static_cast<int>(rng() % 7) - 3)};
    const int k = static_cast<int>(rng() % 4);
    for (int c = 0; c < k; ++c) {
      const auto sense = static_cast<Sense>(rng() % 3);
      p.add({{0, static_cast<int>(rng() % 5) - 2}, {1, static_cast<int>(rng() % 5) - 2}}, sense,
            Rational(static_cast<int>(rng() % 5) - 2, 2));
    }
    auto s = lp_solve(p);
    std::optional<Rational> grid;
    for (int i = 0; i <= 12; ++i)
      for (int j = 0; j <= 12; ++j) {
        Rational x(i, 12), y(j, 12);
        bool ok = true;
        for (const auto& c : p.constraints) {
          Rational lhs = 0;
          for (auto [v, a] : c.terms) lhs += Rational(a) * (v == 0 ? x : y);
          ok = ok && (c.sense == Sense::Le ? lhs <= c.rhs : c.sense == Sense::Ge ? lhs >= c.rhs : lhs == c.rhs);
        }
        if (ok) {
          Rational val = p.objective[0] * x + p.objective[1] * y;
          if (!grid || val < *grid) grid = val;
        }
      }
    if (!s) {
      EXPECT_FALSE(grid) << it;
      continue;
    }
    for (const auto& c : p.constraints) {
      Rational lhs = 0;
      for (auto [v, a] : c.terms) lhs += Rational(a) * s->x[static_cast<std::size_t>(v)];
      EXPECT_TRUE(c.sense == Sense::Le ? lhs <= c.rhs : c.sense == Sense::Ge ? lhs >= c.rhs : lhs == c.rhs);
    }
    if (grid) { EXPECT_LE(s->value, *grid); }
  }
}

TEST(MaxFlow, SmallNetwork) {
  MaxFlow g(4);
  g.add_edge(0, 1, 3);
  g.add_edge(0, 2, 2);
  g.add_edge(1, 2, 1);
  g.add_edge(1, 3, 2);
  g.add_edge(2, 3, 3);
  EXPECT_EQ(g.run(0, 3), 5);
  auto side = g.source_side(0);
  EXPECT_TRUE(side[0]);
  EXPECT_FALSE(side[3]);
}

TEST(Nsol2Affine, Examples) {
  auto a = nsol_2affine(fml(3, {{"xor", {1, 2}}, {"xor", {2, 3}}}), bits("000"));
  EXPECT_EQ(a.value, 1);
  EXPECT_EQ(to_string(a.witness), "010");
  auto b = nsol_2affine(fml(2, {{"eq", {1, 2}}}), bits("10"));
  EXPECT_EQ(b.value, 1);
  EXPECT_EQ(to_string(b.witness), "00");
  auto c = nsol_2affine(fml(2, {{"xor", {1, 2}}}), bits("10"));
  EXPECT_EQ(c.value, 0);
  EXPECT_EQ(c.guarantee, Guarantee::exact());
  EXPECT_EQ(kind_of([] { nsol_2affine(fml(3, {{"xor", {1, 2}}, {"xor", {2, 3}}, {"xor", {1, 3}}}), bits("000")); }),
            ErrorKind::Unsatisfiable);
}

TEST(NsolMonotone, Examples) {
  auto a = nsol_monotone(fml(2, {{"impl", {1, 2}}}), bits("10"));
  EXPECT_EQ(a.value, 1);
  EXPECT_EQ(to_string(a.witness), "00");
  auto b = nsol_monotone(fml(2, {{"t", {1}}, {"impl", {1, 2}}}), bits("00"));
  EXPECT_EQ(b.value, 2);
  EXPECT_EQ(to_string(b.witness), "11");
  EXPECT_EQ(nsol_monotone(fml(2, {{"impl", {1, 2}}}), bits("01")).value, 0);
  EXPECT_EQ(kind_of([] { nsol_monotone(fml(2, {{"t", {1}}, {"impl", {1, 2}}, {"f", {2}}}), bits("00")); }),
            ErrorKind::Unsatisfiable);
}

TEST(NsolBijunctive, Examples) {
  auto a = nsol_bijunctive_2approx(fml(2, {{"xor", {1, 2}}}), bits("00"));
  EXPECT_EQ(a.value, 1);
  EXPECT_EQ(a.guarantee, Guarantee::ratio(2));
  auto b = nsol_bijunctive_2approx(fml(2, {{"or2", {1, 2}}}), bits("00"));
  EXPECT_LE(b.value, 2);
  EXPECT_GE(b.value, 1);
  EXPECT_EQ(nsol_bijunctive_2approx(fml(2, {{"or2", {1, 2}}}), bits("01")).value, 0);
}

TEST(NsolIhsb, Examples) {
  auto a = nsol_ihsb_rounding(fml(3, {{"or3", {1, 2, 3}}}), bits("000"), 3);
  EXPECT_GE(a.value, 1);
  EXPECT_LE(a.value, 3);
  EXPECT_EQ(a.guarantee, Guarantee::ratio(3));
  EXPECT_EQ(nsol_ihsb_rounding(fml(2, {{"impl", {1, 2}}, {"t", {1}}}), bits("11"), 2).value, 0);
  auto c = nsol_ihsb_rounding(fml(2, {{"or2", {1, 2}}, {"f", {1}}}), bits("00"), 2);
  EXPECT_EQ(c.value, 1);
  EXPECT_EQ(to_string(c.witness), "01");
}

TEST(NsolIhsb, NegativeClausesViaDuality) {
  auto r = nsol_ihsb_rounding(fml(3, {{"nand3", {1, 2, 3}}, {"impl", {1, 2}}}), bits("111"), 3);
  EXPECT_TRUE(satisfies(fml(3, {{"nand3", {1, 2, 3}}, {"impl", {1, 2}}}), r.witness));
  EXPECT_LE(r.value, 3);
}

TEST(NsolFeasible, Examples) {
  EXPECT_EQ(nsol_feasible_napprox(fml(3, {{"dup3", {1, 2, 3}}}), bits("000")).value, 0);
  auto b = nsol_feasible_napprox(fml(3, {{"dup3", {1, 2, 3}}}), bits("010"));
  EXPECT_LE(b.value, 3);
  EXPECT_GE(b.value, 1);
  EXPECT_EQ(b.guarantee, Guarantee::n_approx());
  EXPECT_EQ(kind_of([] { nsol_feasible_napprox(fml(1, {{"t", {1}}, {"f", {1}}}), bits("0")); }),
            ErrorKind::Unsatisfiable);
}

TEST(NsolAffine, Examples) {
  auto a = nsol_affine_exact(fml(3, {{"even3", {1, 2, 3}}}), bits("100"));
  EXPECT_EQ(a.value, 1);
  EXPECT_EQ(to_string(a.witness), "000");
  auto b = nsol_affine_exact(fml(2, {{"eq", {1, 2}}, {"t", {1}}}), bits("00"));
  EXPECT_EQ(b.value, 2);
  EXPECT_EQ(to_string(b.witness), "11");
  EXPECT_EQ(nsol_affine_exact(fml(3, {{"even3", {1, 2, 3}}}), bits("110")).value, 0);
  EXPECT_EQ(kind_of([] { nsol_affine_exact(fml(1, {{"t", {1}}, {"f", {1}}}), bits("0")); }), ErrorKind::Unsatisfiable);
}

TEST(SolveNsol, Dispatch) {
  auto a = solve_nsol(fml(2, {{"xor", {1, 2}}, {"t", {1}}}), bits("11"));
  EXPECT_EQ(a.guarantee, Guarantee::exact());
  EXPECT_EQ(a.value, 1);
  auto b = solve_nsol(fml(2, {{"or2", {1, 2}}}), bits("00"));
  EXPECT_EQ(b.guarantee, Guarantee::ratio(2));
  EXPECT_EQ(b.route, "bijunctive_2approx");
  EXPECT_EQ(b.verdict->label.name(), "iS0^2");
  SolverOptions approx{Mode::Approx};
  EXPECT_EQ(kind_of([&] { solve_nsol(fml(3, {{"one_in_three", {1, 2, 3}}}), bits("000"), approx); }),
            ErrorKind::NoPolyAlgorithm);
  auto c = solve_nsol(fml(3, {{"one_in_three", {1, 2, 3}}}), bits("000"));
  EXPECT_EQ(c.value, 1);
  EXPECT_EQ(c.route, "exhaustive_fallback");
}

TEST(SolveNsol, UnitsAreAbsorbed) {
  // units on top of implications stay on the min-cut route
  auto r = solve_nsol(fml(3, {{"impl", {1, 2}}, {"t", {1}}, {"f", {3}}}), bits("001"));
  EXPECT_EQ(r.route, "monotone_mincut");
  EXPECT_EQ(r.value, 3);
}

TEST(SolveNsol, ExactModeMatchesOracle) {
  std::mt19937_64 rng(62);
  auto lang = lang_of({"or2", "xor", "impl", "nae3", "dup3", "t", "f", "horn3"});
  for (int it = 0; it < 200; ++it) {
    Formula phi = random_formula_with_models(rng, lang, 9, 10, 1);
    auto m = random_assignment(rng, phi.var_count());
    auto r = solve_nsol(phi, m, {Mode::Exact});
    EXPECT_EQ(r.guarantee, Guarantee::exact());
    EXPECT_EQ(r.value, oracle_optimize(Problem::NSOL, phi, m).value);
  }
}

namespace {
void audit(std::shared_ptr<const Language> lang, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  for (int it = 0; it < count; ++it) {
    Formula phi = random_formula_with_models(rng, lang, 10, 15, 1);
    const int n = phi.var_count();
    auto m = random_assignment(rng, n);
    auto r = solve_nsol(phi, m);
    auto opt = oracle_optimize(Problem::NSOL, phi, m).value;
    ASSERT_TRUE(satisfies(phi, r.witness));
    ASSERT_GE(r.value, opt);
    switch (r.guarantee.kind) {
      case GuaranteeKind::Exact: ASSERT_EQ(r.value, opt); break;
      case GuaranteeKind::Ratio: ASSERT_LE(r.value * r.guarantee.den, r.guarantee.num * opt); break;
      case GuaranteeKind::NApprox: ASSERT_LE(r.value, n * std::max(1, opt)); break;
    }
    auto d = solve_nsol(dualize_formula(phi), complement(m));
    ASSERT_EQ(d.value, r.value);
  }
}
}  // namespace

TEST(SolveNsol, AuditIM2) { audit(lang_of({"impl", "t", "f"}), 63, 200); }
TEST(SolveNsol, AuditID1) { audit(lang_of({"xor", "t"}), 64, 200); }
TEST(SolveNsol, AuditID2) { audit(lang_of({"xor", "impl"}), 65, 200); }
TEST(SolveNsol, AuditIS00) { audit(lang_of({"or3", "impl", "t", "f"}), 66, 200); }
TEST(SolveNsol, AuditIS10) { audit(lang_of({"nand3", "impl", "t", "f"}), 67, 200); }
TEST(SolveNsol, AuditIL2) { audit(lang_of({"even4", "t", "f"}), 68, 200); }
TEST(SolveNsol, AuditIN) { audit(lang_of({"dup3", "impl", "even4"}), 69, 200); }
