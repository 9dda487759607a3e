#include <gtest/gtest.h>

#include "support.hpp"

using namespace boolhd;
using namespace boolhd::gf2;

namespace {
BitVec bv(std::string_view s) { return BitVec::from_string(s); }

BitVec random_vec(std::mt19937_64& rng, std::size_t n) {
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1u);
  return v;
}

bool satisfies_system(const Gf2System& s, const BitVec& x) {
  for (std::size_t i = 0; i < s.rows.size(); ++i)
    if (s.rows[i].dot(x) != (s.rhs[i] != 0)) return false;
  return true;
}
}  // namespace

TEST(BitVec, Basics) {
  auto v = bv("1011");
  EXPECT_EQ(v.weight(), 3);
  EXPECT_EQ(v.to_string(), "1011");
  v.flip(0);
  EXPECT_EQ(v.to_string(), "0011");
  EXPECT_TRUE(bv("011") < bv("110"));
  EXPECT_TRUE(bv("101").dot(bv("100")));
  EXPECT_THROW(bv("12"), Error);
  BitVec wide(130);
  wide.set(129);
  EXPECT_EQ(wide.weight(), 1);
}

TEST(SolveAffine, Examples) {
  Gf2System a(2);
  a.add("11", true);
  auto s = solve_affine(a);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular.to_string(), "10");
  ASSERT_EQ(s->nullspace.size(), 1u);
  EXPECT_EQ(s->nullspace[0].to_string(), "11");

  Gf2System id(2);
  id.add("10", true);
  id.add("01", true);
  s = solve_affine(id);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular.to_string(), "11");
  EXPECT_TRUE(s->nullspace.empty());

  Gf2System bad(2);
  bad.add("11", true);
  bad.add("11", false);
  EXPECT_FALSE(solve_affine(bad));
}

TEST(SolveAffine, RejectsRaggedRows) {
  Gf2System s(3);
  EXPECT_THROW(s.add("11", true), Error);
}

TEST(SolveAffine, RandomSystems) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 500; ++it) {
    const std::size_t cols = 1 + rng() % 12, rows = rng() % 12;
    Gf2System s(cols);
    for (std::size_t r = 0; r < rows; ++r) s.add(random_vec(rng, cols), rng() & 1u);
    auto sol = solve_affine(s);
    // brute-force solution set
    std::vector<BitVec> all;
    for (std::uint32_t c = 0; c < (1u << cols); ++c) {
      BitVec x(cols);
      for (std::size_t i = 0; i < cols; ++i) x.set(i, (c >> i) & 1u);
      if (satisfies_system(s, x)) all.push_back(x);
    }
    if (!sol) {
      EXPECT_TRUE(all.empty());
      continue;
    }
    EXPECT_EQ(sol->rank + sol->nullspace.size(), cols);
    EXPECT_TRUE(satisfies_system(s, sol->particular));
    EXPECT_EQ(all.size(), std::size_t{1} << sol->nullspace.size());
    Gf2System hom = s;
    for (auto& b : hom.rhs) b = 0;
    for (const auto& v : sol->nullspace) EXPECT_TRUE(satisfies_system(hom, v));
  }
}

TEST(MinWeight, Examples) {
  auto a = min_weight_nonzero({bv("111")});
  ASSERT_TRUE(a);
  EXPECT_EQ(a->first, 3);
  EXPECT_EQ(a->second.to_string(), "111");
  EXPECT_FALSE(min_weight_nonzero({}));
  auto b = min_weight_nonzero({bv("110"), bv("011")});
  ASSERT_TRUE(b);
  EXPECT_EQ(b->first, 2);
  // 011, 101 and 110 all have weight 2; the lexicographically smallest wins
  EXPECT_EQ(b->second.to_string(), "011");
}

TEST(MinWeight, Cap) {
  std::vector<BitVec> basis;
  for (int i = 0; i < 5; ++i) {
    BitVec v(5);
    v.set(static_cast<std::size_t>(i));
    basis.push_back(v);
  }
  EXPECT_THROW(min_weight_nonzero(basis, 4), Error);
  EXPECT_EQ(min_weight_nonzero(basis, 5)->first, 1);
}

TEST(NearestCodeword, Examples) {
  auto [d, x] = nearest_codeword({bv("11")}, bv("10"));
  EXPECT_EQ(d, 1);
  EXPECT_EQ(x.to_string(), "0");
  auto [d2, x2] = nearest_codeword({}, bv("101"));
  EXPECT_EQ(d2, 2);
  EXPECT_EQ(x2.size(), 0u);
}

TEST(NearestCodeword, MatchesEnumeration) {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 300; ++it) {
    const std::size_t k = rng() % 8, n = 1 + rng() % 10;
    std::vector<BitVec> gen;
    for (std::size_t i = 0; i < k; ++i) gen.push_back(random_vec(rng, n));
    BitVec m = random_vec(rng, n);
    auto [d, x] = nearest_codeword(gen, m);
    int best = static_cast<int>(n) + 1;
    std::optional<BitVec> best_x;
    for (std::uint32_t c = 0; c < (1u << k); ++c) {
      BitVec msg(k), word(n);
      for (std::size_t i = 0; i < k; ++i)
        if ((c >> (k - 1 - i)) & 1u) {
          msg.set(i);
          word ^= gen[i];
        }
      int dist = (word ^ m).weight();
      if (dist < best) best = dist, best_x = msg;
    }
    EXPECT_EQ(d, best);
    EXPECT_EQ(x, *best_x);
  }
}
