#include <gtest/gtest.h>

#include "support.hpp"

using namespace boolhd;
using namespace boolhd::testing;

namespace {

Relation rel_of(int arity, std::initializer_list<const char*> ts) {
  std::vector<TupleCode> codes;
  for (const char* t : ts) codes.push_back(parse_tuple(t, arity));
  return Relation(arity, codes);
}

bool brute_polymorphism(const BoolFunction& f, const Relation& r) {
  const int k = f.arity();
  const auto& ts = r.tuples();
  std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
  while (true) {
    TupleCode out = 0;
    for (int c = 0; c < r.arity(); ++c) {
      TupleCode args = 0;
      for (int j = 0; j < k; ++j) args = (args << 1) | static_cast<TupleCode>(tuple_bit(ts[pick[static_cast<std::size_t>(j)]], c, r.arity()));
      out = (out << 1) | static_cast<TupleCode>(f(args));
    }
    if (!r.contains(out)) return false;
    int j = k - 1;
    while (j >= 0 && ++pick[static_cast<std::size_t>(j)] == ts.size()) pick[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) return true;
  }
}

}  // namespace

TEST(Relation, RejectsEmptyAndBadArity) {
  EXPECT_THROW(Relation(2, {}), Error);
  EXPECT_THROW(Relation(0, {0}), Error);
  EXPECT_THROW(Relation(17, {0}), Error);
}

TEST(Relation, TupleEncodingFirstCoordinateIsHighBit) {
  Relation r = rel_of(3, {"100"});
  EXPECT_TRUE(r.contains(4));
  std::vector<std::uint8_t> b{1, 0, 0};
  EXPECT_TRUE(r.contains_bits(b));
}

TEST(Polymorphism, Examples) {
  EXPECT_TRUE(is_polymorphism(fn::identity(), rel::nae3()));
  EXPECT_TRUE(is_polymorphism(fn::identity(), rel::one_in_three()));
  EXPECT_FALSE(is_polymorphism(fn::conj(), rel::or_m(2)));
  EXPECT_TRUE(is_polymorphism(fn::xor3(), rel::even_m(3)));
}

TEST(Polymorphism, ThresholdFunctions) {
  // h_m is a polymorphism of nand^m, dual(h_m) of or^m
  for (int m = 2; m <= 5; ++m) {
    EXPECT_TRUE(is_polymorphism(fn::h(m), rel::nand_m(m)));
    EXPECT_TRUE(is_polymorphism(fn::dual_h(m), rel::or_m(m)));
    EXPECT_FALSE(is_polymorphism(fn::h(m), rel::nand_m(m + 1)));
    EXPECT_FALSE(is_polymorphism(fn::dual_h(m), rel::or_m(m + 1)));
  }
}

TEST(Polymorphism, AgreesWithBruteForceOnRandomRelations) {
  std::mt19937_64 rng(11);
  std::vector<BoolFunction> fs = {fn::identity(), fn::negation(), fn::constant0(), fn::constant1(), fn::conj(),
                                  fn::disj(), fn::xor2(), fn::implies(), fn::and_not(), fn::majority(), fn::xor3(),
                                  fn::xnor3()};
  for (int it = 0; it < 200; ++it) {
    Relation r = random_relation(rng, 1 + static_cast<int>(rng() % 5));
    for (const auto& f : fs) ASSERT_EQ(is_polymorphism(f, r), brute_polymorphism(f, r));
    ThresholdFunction h3 = fn::h(2);
    BoolFunction h3b = BoolFunction::from(3, [](std::span<const int> a) { return a[0] + a[1] + a[2] >= 2 ? 1 : 0; });
    ASSERT_EQ(is_polymorphism(h3, r), brute_polymorphism(h3b, r));
  }
}

TEST(PropertyFlags, Examples) {
  auto e4 = property_flags(rel::even_m(4));
  EXPECT_TRUE(e4.zero_valid);
  EXPECT_TRUE(e4.one_valid);  // 1111 has even weight
  EXPECT_TRUE(e4.affine);
  EXPECT_TRUE(e4.complementive);
  EXPECT_FALSE(e4.horn);
  EXPECT_FALSE(e4.bijunctive);

  auto nae = property_flags(rel::nae3());
  EXPECT_TRUE(nae.complementive);
  EXPECT_FALSE(nae.affine);
  EXPECT_FALSE(nae.zero_valid);

  auto t = property_flags(rel::t());
  EXPECT_TRUE(t.one_valid);
  EXPECT_FALSE(t.zero_valid);
  EXPECT_TRUE(t.horn && t.dual_horn && t.monotone && t.bijunctive && t.affine);
  EXPECT_FALSE(t.complementive);
}

TEST(PropertyFlags, Invariants) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 300; ++it) {
    Relation r = random_relation(rng, 1 + static_cast<int>(rng() % 5));
    auto f = property_flags(r);
    EXPECT_EQ(f.monotone, f.horn && f.dual_horn);
    if (f.affine) { EXPECT_EQ(std::popcount(r.size()), 1); }
    auto d = property_flags(dualize(r));
    EXPECT_EQ(d.horn, f.dual_horn);
    EXPECT_EQ(d.dual_horn, f.horn);
    EXPECT_EQ(d.zero_valid, f.one_valid);
    EXPECT_EQ(d.one_valid, f.zero_valid);
    EXPECT_EQ(d.bijunctive, f.bijunctive);
    EXPECT_EQ(d.affine, f.affine);
    EXPECT_EQ(d.complementive, f.complementive);
    EXPECT_EQ(d.monotone, f.monotone);
  }
}

TEST(Dualize, Examples) {
  EXPECT_EQ(dualize(rel::t()), rel::f());
  EXPECT_EQ(dualize(dualize(rel::dup3())), rel::dup3());
  EXPECT_EQ(dualize(rel::or_m(2)), rel::nand_m(2));
}

TEST(Dualize, Involution) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 100; ++it) {
    Relation r = random_relation(rng, 1 + static_cast<int>(rng() % 6));
    EXPECT_EQ(dualize(dualize(r)), r);
  }
}

TEST(CnfDecompose, Examples) {
  EXPECT_THROW(
      {
        try {
          cnf_decompose(rel::or_m(2), {Shape::Horn});
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::ShapeUnavailable);
          throw;
        }
      },
      Error);

  auto imp = cnf_decompose(rel::impl(), {Shape::Bijunctive});
  ASSERT_EQ(imp.size(), 1u);
  EXPECT_EQ(imp[0], Clause::make({1}, {0}));
  EXPECT_EQ(imp[0].kind, ClauseKind::Impl);

  auto par = cnf_decompose(rel::even_m(3), {Shape::Parity});
  ASSERT_EQ(par.size(), 1u);
  EXPECT_EQ(par[0].positives, (std::vector<int>{0, 1, 2}));
  EXPECT_FALSE(par[0].parity);
}

TEST(CnfDecompose, IhsbShapes) {
  auto c = cnf_decompose(rel::or_m(3), {Shape::IhsbPos, 3});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].kind, ClauseKind::Or);
  EXPECT_THROW(cnf_decompose(rel::or_m(3), {Shape::IhsbPos, 2}), Error);
  EXPECT_THROW(cnf_decompose(rel::or_m(2), {Shape::IhsbNeg, 2}), Error);
  EXPECT_NO_THROW(cnf_decompose(rel::nand_m(2), {Shape::IhsbNeg, 2}));
}

TEST(CnfDecompose, ModelsEqualRelation) {
  std::mt19937_64 rng(14);
  const std::vector<ShapeSpec> shapes = {{Shape::Horn},    {Shape::DualHorn},   {Shape::Bijunctive},
                                         {Shape::Monotone}, {Shape::IhsbPos, 3}, {Shape::IhsbNeg, 3},
                                         {Shape::Parity}};
  int decomposed = 0;
  for (int it = 0; it < 400; ++it) {
    const int arity = 1 + static_cast<int>(rng() % 5);
    // bias towards structured relations by intersecting with closures
    Relation r = random_relation(rng, arity);
    if (it % 4 == 1) r = Relation::from_predicate(arity, [&](TupleCode t) { return std::popcount(t) % 2 == 0 || t == 1; });
    for (auto s : shapes) {
      try {
        auto cs = cnf_decompose(r, s);
        ++decomposed;
        for (const auto& c : cs) ASSERT_TRUE(fits_shape(c, s));
        ASSERT_EQ(clause_models(cs, arity), r.tuples());
      } catch (const Error& e) {
        ASSERT_EQ(e.kind(), ErrorKind::ShapeUnavailable);
      }
    }
  }
  EXPECT_GT(decomposed, 100);
}

TEST(CnfDecompose, BuiltinsInTheirShapes) {
  struct Case {
    Relation r;
    ShapeSpec s;
  };
  std::vector<Case> cases = {{rel::horn3(), {Shape::Horn}},      {rel::dhorn3(), {Shape::DualHorn}},
                             {rel::xor2(), {Shape::Bijunctive}},  {rel::impl(), {Shape::Monotone}},
                             {rel::even_m(4), {Shape::Parity}},   {rel::odd_m(3), {Shape::Parity}},
                             {rel::or_m(4), {Shape::IhsbPos, 4}}, {rel::nand_m(3), {Shape::IhsbNeg, 3}}};
  for (const auto& c : cases) {
    auto cs = cnf_decompose(c.r, c.s);
    EXPECT_EQ(clause_models(cs, c.r.arity()), c.r.tuples());
  }
}

TEST(PrimeImplicates, RejectsWideRelations) {
  EXPECT_THROW(prime_implicates(rel::or_m(13)), Error);
  EXPECT_NO_THROW(prime_implicates(rel::or_m(12)));
}

TEST(Language, ParseAndFormat) {
  std::istringstream in("# demo\nrel r 2 01,10  # xor\nrel u 1 1\n");
  Language l = parse_language(in);
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l.relation(0), rel::xor2());
  EXPECT_EQ(l.relation(1), rel::t());
  std::istringstream again(format_language(l));
  Language l2 = parse_language(again);
  EXPECT_EQ(l2.relations(), l.relations());
}

TEST(Language, ParseErrors) {
  for (const char* bad : {"rel r 2 011\n", "rel r 2\n", "rel r 0 0\n", "rel r 2 01\nrel r 2 10\n", "foo\n",
                          "rel r 2 0x\n"}) {
    std::istringstream in(bad);
    try {
      parse_language(in);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Parse) << bad;
    }
  }
}

TEST(Language, Builtins) {
  EXPECT_EQ(*builtin_relation("or2"), rel::or_m(2));
  EXPECT_EQ(*builtin_relation("nand2"), rel::nand_m(2));
  EXPECT_EQ(*builtin_relation("even3"), rel::even_m(3));
  EXPECT_EQ(*builtin_relation("odd3"), rel::odd_m(3));
  EXPECT_EQ(*builtin_relation("dup3"), rel::dup3());
  EXPECT_EQ(builtin_relation("dup3")->size(), 6u);
  EXPECT_EQ(builtin_relation("one_in_three")->size(), 3u);
  EXPECT_FALSE(builtin_relation("nope").has_value());
}
