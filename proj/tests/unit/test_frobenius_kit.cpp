#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace frobkit;
using namespace frobkit::testing;

namespace {

TEST(Decompose, Examples) {
  auto R = ring(3, {"x", "y"});
  auto d = decompose(parse_poly("x^5*y^2", R), 1);
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.components.at({2, 2}), parse_poly("x", R));
  auto s = decompose(parse_poly("(x+y)^3", R), 1);
  ASSERT_EQ(s.components.size(), 1u);
  EXPECT_EQ(s.components.at({0, 0}), parse_poly("x+y", R));
}

TEST(Decompose, Relative) {
  auto R = ring(3, {"t", "x"}, false, 1);
  auto d = decompose(parse_poly("t*x^5", R), 1, DecompositionMode::relative);
  ASSERT_EQ(d.relative.size(), 1u);
  const auto& pairs = d.relative.at({2});
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].s, parse_poly("x", R));
  EXPECT_EQ(pairs[0].r, parse_poly("t", R));
}

TEST(Trace, Examples) {
  auto R = ring(3, {"x", "y"});
  EXPECT_EQ(trace(parse_poly("x^2*y^2", R), 1), Polynomial::constant(R, 1));
  EXPECT_TRUE(trace(parse_poly("x", R), 1).is_zero());
  EXPECT_EQ(trace(parse_poly("x^8*y^8", R), 2), Polynomial::constant(R, 1));
  auto T = ring(3, {"t", "x"}, false, 1);
  auto one = relative_trace(parse_poly("x^2", T), 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].s, Polynomial::constant(T, 1));
  EXPECT_EQ(one[0].r, Polynomial::constant(T, 1));
  auto tt = relative_trace(parse_poly("t*x^2", T), 1);
  ASSERT_EQ(tt.size(), 1u);
  EXPECT_EQ(tt[0].r, parse_poly("t", T));
  auto tx = relative_trace(parse_poly("t*x^5", T), 1);
  ASSERT_EQ(tx.size(), 1u);
  EXPECT_EQ(tx[0].s, parse_poly("x", T));
  EXPECT_EQ(tx[0].r, parse_poly("t", T));
}

TEST(BracketRoot, Examples) {
  auto R = ring(3, {"x", "y"});
  EXPECT_TRUE(ideal_eq(bracket_root(ideal(R, {"x^5*y^2"}), 1), ideal(R, {"x"})));
  EXPECT_TRUE(ideal_eq(bracket_root(ideal(R, {"(x+y)^3"}), 1), ideal(R, {"x+y"})));
  EXPECT_TRUE(bracket_root(ideal(R, {"(x*y)^8"}), 2).is_unit());
}

TEST(RootExact, Examples) {
  auto R = ring(3, {"x", "y"});
  EXPECT_EQ(root_exact(parse_poly("x^3+y^3", R), 1), parse_poly("x+y", R));
  EXPECT_EQ(root_exact(parse_poly("2*x^9", R), 2), parse_poly("2*x", R));
  EXPECT_THROW(root_exact(parse_poly("x^2", R), 1), InvalidArgument);
}

// Oracle: split each exponent by hand and regroup term by term.
TEST(FrobProperties, DecompositionMatchesTermwiseSplit) {
  for (std::uint64_t p : {2, 3, 5}) {
    auto R = ring(p, {"x", "y"});
    std::mt19937_64 rng(31 * p);
    for (unsigned e = 1; e <= 2; ++e) {
      const auto qq = checked_prime_power(p, e);
      for (int it = 0; it < 30; ++it) {
        auto f = random_poly(R, rng, 6, 2 * qq + 1);
        std::map<MultiIndex, Dense> expect;
        for (const auto& t : f.terms()) {
          MultiIndex idx{t.mono[0] % qq, t.mono[1] % qq};
          expect[idx][{t.mono[0] / qq, t.mono[1] / qq}] = t.coeff;
        }
        auto d = decompose(f, e);
        ASSERT_EQ(d.components.size(), expect.size());
        for (const auto& [idx, c] : d.components) EXPECT_EQ(dense(c), expect.at(idx));
        EXPECT_EQ(d.recompose(), f);
      }
    }
  }
}

TEST(FrobProperties, RelativeRecomposition) {
  auto R = ring(5, {"t", "x", "y"}, false, 1);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 30; ++it) {
    auto f = random_poly(R, rng, 6, 12);
    EXPECT_EQ(decompose(f, 1, DecompositionMode::relative).recompose(), f);
  }
  auto L = ring(3, {"x", "y"}, true);
  for (int it = 0; it < 30; ++it) {
    auto f = random_poly(L, rng, 5, 6, -6);
    EXPECT_EQ(decompose(f, 2).recompose(), f);
  }
}

// I^[1/q] is the smallest J with I inside J^[q].
TEST(FrobProperties, GaloisConnection) {
  for (std::uint64_t p : {2, 3}) {
    auto R = ring(p, {"x", "y"});
    std::mt19937_64 rng(11 * p);
    for (int it = 0; it < 25; ++it) {
      Ideal I(R, {random_poly(R, rng, 3, 7), random_poly(R, rng, 2, 7)});
      auto root = bracket_root(I, 1);
      EXPECT_TRUE(frob_power(root, 1).contains(I));
      for (int k = 0; k < 4; ++k) {
        Ideal J(R, {random_poly(R, rng, 2, 3), random_poly(R, rng, 1, 2)});
        EXPECT_EQ(J.contains(root), frob_power(J, 1).contains(I))
            << I.to_string() << " vs " << J.to_string();
      }
    }
  }
}

TEST(FrobProperties, RootsCompose) {
  auto R = ring(3, {"x", "y"});
  std::mt19937_64 rng(5);
  for (int it = 0; it < 25; ++it) {
    Ideal I(R, {random_poly(R, rng, 4, 20)});
    EXPECT_TRUE(ideal_eq(bracket_root(bracket_root(I, 1), 1), bracket_root(I, 2)));
    auto f = random_poly(R, rng, 3, 4);
    EXPECT_EQ(root_exact(frob(f, 2), 2), f);
    EXPECT_TRUE(ideal_eq(bracket_root(frob_power(Ideal(R, {f}), 1), 1), Ideal(R, {f})));
  }
}

}  // namespace
