#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"

using namespace frobkit;
using namespace frobkit::testing;

namespace {

std::vector<std::string> basis_strings(const Ideal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.basis()) out.push_back(g.to_string());
  return out;
}

TEST(Groebner, Examples) {
  auto R = ring(3, {"x", "y"});
  EXPECT_EQ(basis_strings(ideal(R, {"x+y", "y"})), (std::vector<std::string>{"y", "x"}));
  EXPECT_EQ(basis_strings(ideal(R, {"x^2", "x*y", "y^2", "x"})),
            (std::vector<std::string>{"x", "y^2"}));
  EXPECT_TRUE(Ideal::zero(R).basis().empty());
  EXPECT_TRUE(ideal(R, {"x", "1+x"}).is_unit());
}

TEST(Ideal, Membership) {
  auto R = ring(3, {"x", "y"});
  EXPECT_TRUE(ideal(R, {"x", "y"}).contains(parse_poly("x+2*y", R)));
  EXPECT_FALSE(ideal(R, {"x^2", "y^2"}).contains(parse_poly("x*y", R)));
  EXPECT_TRUE(ideal_eq(ideal(R, {"x+y", "y"}), ideal(R, {"x", "y"})));
}

TEST(Ideal, Colon) {
  auto R = ring(3, {"x", "y"});
  auto m = ideal(R, {"x", "y"});
  EXPECT_TRUE(ideal_eq(colon(ideal(R, {"x^2", "y^2"}), parse_poly("(x+y)^2", R)), m));
  EXPECT_TRUE(ideal_eq(colon(ideal(R, {"x^3", "y^3"}), parse_poly("x^2*y^2", R)), m));
  auto I = ideal(R, {"x^2+y", "x*y^3"});
  EXPECT_TRUE(ideal_eq(colon(I, Ideal::unit(R)), I));
  EXPECT_THROW(colon(I, Ideal::zero(R)), InvalidArgument);
}

TEST(Ideal, FrobPowerAndProducts) {
  auto R = ring(3, {"x", "y"});
  EXPECT_TRUE(ideal_eq(frob_power(ideal(R, {"x", "y"}), 1), ideal(R, {"x^3", "y^3"})));
  EXPECT_TRUE(ideal_eq(frob_power(ideal(R, {"x+y"}), 1), ideal(R, {"x^3+y^3"})));
  EXPECT_TRUE(frob_power(Ideal::unit(R), 3).is_unit());
  EXPECT_TRUE(ideal_eq(product(ideal(R, {"x"}), ideal(R, {"y"})), ideal(R, {"x*y"})));
  EXPECT_TRUE(ideal_eq(power(ideal(R, {"x", "y"}), 2), ideal(R, {"x^2", "x*y", "y^2"})));
  EXPECT_TRUE(ideal_eq(power(ideal(R, {"x+y"}), 9), ideal(R, {"x^9+y^9"})));
}

TEST(Ideal, LaurentSaturation) {
  auto L = ring(3, {"x", "y"}, true);
  EXPECT_TRUE(ideal(L, {"x"}).is_unit());
  EXPECT_TRUE(ideal_eq(ideal(L, {"x*y + x^2*y"}), ideal(L, {"1+x"})));
}

// Property: the reduced basis does not depend on the generating set.
TEST(GroebnerProperties, Canonicality) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    auto R = ring(p, {"x", "y", "z"});
    std::mt19937_64 rng(p * 17);
    for (int it = 0; it < 25; ++it) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(random_poly(R, rng, 3, 3));
      Ideal I(R, gens);
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      // Add redundant combinations.
      shuffled.push_back(gens[0] * random_poly(R, rng, 2, 2) + gens[1]);
      shuffled[0] = shuffled[0] + shuffled[1] * random_poly(R, rng, 2, 1);
      Ideal J(R, shuffled);
      EXPECT_EQ(I.to_string(), J.to_string());
      EXPECT_EQ(I.hash(), J.hash());
      for (const auto& g : gens) EXPECT_TRUE(I.contains(g));
      for (const auto& b : I.basis()) {
        EXPECT_EQ(b.leading().coeff, 1u);
        std::vector<Polynomial> others;
        for (const auto& c : I.basis()) {
          if (!(c == b)) others.push_back(c);
        }
        // Reduced: no term of b is divisible by another leading term.
        EXPECT_EQ(normal_form(b, others), b);
      }
    }
  }
}

TEST(IdealProperties, IntersectionAndColonLaws) {
  auto R = ring(3, {"x", "y"});
  std::mt19937_64 rng(99);
  for (int it = 0; it < 20; ++it) {
    Ideal A(R, {random_poly(R, rng, 2, 3), random_poly(R, rng, 2, 3)});
    Ideal B(R, {random_poly(R, rng, 2, 3)});
    if (A.is_zero() || B.is_zero()) continue;
    auto I = intersect(A, B);
    EXPECT_TRUE(A.contains(I));
    EXPECT_TRUE(B.contains(I));
    EXPECT_TRUE(I.contains(product(A, B)));
    // (A : g) * g is contained in A.
    const auto& g = B.gens().front();
    auto C = colon(A, g);
    for (const auto& c : C.basis()) EXPECT_TRUE(A.contains(c * g));
    EXPECT_TRUE(C.contains(A));
  }
}

TEST(Ideal, ContentHashIsFnv1a) {
  EXPECT_EQ(content_hash(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(content_hash("a"), 0xaf63dc4c8601ec8cull);
}

}  // namespace
