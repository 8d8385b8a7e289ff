#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace frobkit;
using namespace frobkit::testing;

namespace {

ThresholdProblem perez(const Ring& R, const Rational& t1) {
  return ThresholdProblem{CartierAlgebraSpec::make_full(R), {ideal(R, {"x+y"})}, {t1}, ideal(R, {"x*y"})};
}

TEST(Fpt, PerezValues) {
  auto R = ring(3, {"x", "y"});
  struct Case {
    Rational t1, fpt;
  };
  for (const auto& c : {Case{q(1, 3), q(2, 3)}, Case{q(2, 3), q(2, 3)}, Case{q(1, 9), q(8, 9)},
                        Case{q(7, 9), q(5, 9)}}) {
    auto r = fpt_search(perez(R, c.t1));
    ASSERT_TRUE(r.exact.has_value()) << to_string(c.t1);
    EXPECT_EQ(*r.exact, c.fpt);
    EXPECT_LE(r.lo, c.fpt);
    EXPECT_GE(r.hi, c.fpt);
    EXPECT_FALSE(r.transcript.empty());
  }
}

// Oracle: a monomial x^a y^b alone has threshold 1/max(a, b).
TEST(Fpt, MonomialOracle) {
  for (std::uint64_t p : {2, 3, 5}) {
    auto R = ring(p, {"x", "y"});
    for (int a = 1; a <= 4; ++a) {
      ThresholdProblem prob{CartierAlgebraSpec::make_full(R), {}, {},
                            ideal(R, {"x^" + std::to_string(a) + "*y"})};
      ThresholdOptions opts;
      opts.depth = 6;
      auto r = fpt_search(prob, opts);
      const Rational expect(1, a);
      EXPECT_LE(r.lo, expect);
      EXPECT_GE(r.hi, expect);
      if (padic_exponent(expect, p)) {
        ASSERT_TRUE(r.exact.has_value());
        EXPECT_EQ(*r.exact, expect);
      }
    }
  }
}

TEST(Jumps, Examples) {
  auto R = ring(3, {"x", "y"});
  ThresholdOptions opts;
  opts.depth = 3;
  auto xy = jumping_numbers({CartierAlgebraSpec::make_full(R), {}, {}, ideal(R, {"x*y"})}, q(1), opts);
  ASSERT_EQ(xy.size(), 2u);
  EXPECT_EQ(xy[0].lo, q(0));
  EXPECT_EQ(xy[0].hi, q(26, 27));
  EXPECT_EQ(xy[1].lo, q(1));
  EXPECT_NE(xy[0].hash, xy[1].hash);
  auto line = jumping_numbers({CartierAlgebraSpec::make_full(R), {}, {}, ideal(R, {"x+y"})}, q(1), opts);
  ASSERT_EQ(line.size(), 2u);
  EXPECT_EQ(line[1].lo, q(1));
  auto zero = jumping_numbers({CartierAlgebraSpec::make_full(R), {}, {}, ideal(R, {"x*y"})}, q(0), opts);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].basis, "[1]");
}

TEST(Jumps, ScalingProbe) {
  auto R = ring(3, {"x", "y"});
  ThresholdProblem prob{CartierAlgebraSpec::make_full(R), {}, {}, ideal(R, {"x*y"})};
  ThresholdOptions opts;
  opts.depth = 3;
  EXPECT_EQ(jump_scaling_probe(prob, q(1), q(3), opts).outcome, ProbeOutcome::confirmed);
  EXPECT_EQ(jump_scaling_probe(prob, q(0), q(1), opts).outcome, ProbeOutcome::confirmed);
  EXPECT_EQ(jump_scaling_probe(prob, q(2), q(3), opts).outcome, ProbeOutcome::vacuous);
  EXPECT_EQ(jump_scaling_probe(prob, q(1, 3), q(3), opts).outcome, ProbeOutcome::failed);
}

TEST(Jumps, ParallelMatchesSerial) {
  auto R = ring(3, {"x", "y"});
  ThresholdProblem prob{CartierAlgebraSpec::make_full(R), {}, {}, ideal(R, {"x^2+y^3"})};
  ThresholdOptions a, b;
  a.depth = b.depth = 3;
  b.jobs = 4;
  auto sa = jumping_numbers(prob, q(2), a);
  auto sb = jumping_numbers(prob, q(2), b);
  ASSERT_EQ(sa.size(), sb.size());
  for (std::size_t i = 0; i < sa.size(); ++i) {
    EXPECT_EQ(sa[i].lo, sb[i].lo);
    EXPECT_EQ(sa[i].hash, sb[i].hash);
  }
}

}  // namespace
