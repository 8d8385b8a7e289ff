#pragma once

#include <optional>
#include <vector>

#include "frobkit/cartier.hpp"

namespace frobkit {

// A one-parameter family: fixed ideals at fixed exponents, plus a free ideal
// whose exponent varies.
struct ThresholdProblem {
  CartierAlgebraSpec alg;
  std::vector<Ideal> fixed_ideals;
  std::vector<Rational> fixed_exponents;
  Ideal free_ideal;

  MixedPair at(const Rational& t) const;
};

struct ThresholdOptions {
  unsigned depth = 8;          // final interval width p^-depth
  unsigned confirm_depth = 6;  // K' for exact candidates
  unsigned max_growth = 6;     // upper end tried up to p^max_growth
  unsigned jobs = 1;
  TauOptions tau;
};

struct ThresholdStep {
  Rational t;
  bool unit = false;
};

struct ThresholdResult {
  Rational lo;
  Rational hi;
  std::optional<Rational> exact;
  std::vector<ThresholdStep> transcript;
  // Empirical record only: the first q = p^e (e <= depth) for which the
  // reported value lies strictly inside some (a/q, a/(q-1)).
  std::optional<std::int64_t> inside_avoidance_window;
};

ThresholdResult fpt_search(const ThresholdProblem& problem, const ThresholdOptions& opts = {});

struct ConstancyInterval {
  Rational lo;
  Rational hi;
  std::uint64_t hash = 0;
  std::string basis;
};

// Maximal runs of equal test ideals on the grid m/p^depth inside [0, T].
std::vector<ConstancyInterval> jumping_numbers(const ThresholdProblem& problem, const Rational& T,
                                               const ThresholdOptions& opts = {});

enum class ProbeOutcome { confirmed, vacuous, failed };

struct ProbeResult {
  ProbeOutcome outcome = ProbeOutcome::failed;
  std::string detail;
};

// Checks that p*t is again a jump, using scale_test_ideal to relate the two
// levels. All exponents of the base point are multiplied by p.
ProbeResult jump_scaling_probe(const ThresholdProblem& problem, const Rational& t,
                               const Rational& T, const ThresholdOptions& opts = {});

const char* to_string(ProbeOutcome o);

}  // namespace frobkit
