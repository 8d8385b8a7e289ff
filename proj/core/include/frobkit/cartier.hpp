#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobkit/frobenius.hpp"
#include "frobkit/ideal.hpp"
#include "frobkit/rational.hpp"

namespace frobkit {

// A regular chart F_p[base] -> F_p[base, fiber]. The total ring lists the
// base variables first and starts its fiber block right after them.
struct RelativeChart {
  Ring base;
  Ring total;
  // Formal generator of the relative canonical module, e.g. "dx^dy".
  std::string omega_tag;

  static RelativeChart make(const Ring& base, const std::vector<std::string>& fiber);
  // Base polynomial viewed in the total ring.
  Polynomial extend(const Polynomial& r) const;
  Ideal extend(const Ideal& ideal) const;
  // Total-ring polynomial in base variables only, viewed in the base ring.
  Polynomial restrict(const Polynomial& s) const;
};

// kappa^level composed with multiplication by twist.
struct CartierGenerator {
  unsigned level = 1;
  Polynomial twist;
};

struct CartierAlgebraSpec {
  Ring ring;
  bool full = false;
  // Twists live in chart->base when a chart is present, otherwise in ring.
  std::vector<CartierGenerator> generators;
  std::optional<RelativeChart> chart;

  static CartierAlgebraSpec make_full(Ring ring);
  static CartierAlgebraSpec make(Ring ring, std::vector<CartierGenerator> generators);
  // "full" or "e:EXPR,e:EXPR,..."
  static CartierAlgebraSpec parse(std::string_view text, const Ring& ring);

  // The common generating degree e0; throws InvalidArgument for mixed degrees.
  unsigned degree() const;
  std::string to_string() const;
};

struct MixedPair {
  std::vector<Ideal> ideals;
  std::vector<Rational> exponents;

  MixedPair() = default;
  MixedPair(std::vector<Ideal> ideals, std::vector<Rational> exponents);
  const Ring& ring() const { return ideals.front().ring(); }
  bool all_principal() const;
};

// One application of the degree-e0 part of the algebra to an ideal.
Ideal cplus(const Ideal& ideal, const CartierAlgebraSpec& alg);

// Image of an ideal under the degree e*e0 part (cplus iterated e times).
Ideal cartier_image(const Ideal& ideal, const CartierAlgebraSpec& alg, unsigned e);

struct SigmaOptions {
  std::size_t max_iterations = 64;
};

Ideal sigma(const CartierAlgebraSpec& alg, const Ideal& start, const SigmaOptions& opts = {});

struct TauOptions {
  unsigned conf = 2;
  // First chain index included in the accumulated sum.
  unsigned start = 1;
  // Largest chain index e tried before giving up.
  unsigned max_level = 24;
};

struct TauResult {
  Ideal ideal;
  // Chain index at which the computation stopped.
  unsigned levels = 0;
  // True when the value is proven by exactness or a matching upper bound,
  // false when stability was only observed for the confirmation window.
  bool certified = false;
  std::string reason;
};

TauResult tau_mixed(const MixedPair& pair, const CartierAlgebraSpec& alg,
                    const TauOptions& opts = {});

// Decides tau == (1) for principal pairs under a full algebra, without
// necessarily computing the ideal. Other inputs fall back to tau_mixed.
bool tau_is_unit(const MixedPair& pair, const CartierAlgebraSpec& alg,
                 const TauOptions& opts = {});

struct SkodaStep {
  MixedPair reduced;
  Ideal multiplier;
};

SkodaStep skoda_reduce(const MixedPair& pair, std::size_t index);

Ideal scale_test_ideal(const Ideal& tau, const CartierAlgebraSpec& alg);

// The pullback of an algebra on chart.base to chart.total.
CartierAlgebraSpec pullback_cartier(const CartierAlgebraSpec& alg, const RelativeChart& chart);

// Level-e action of a pulled-back generator on one element.
Polynomial pullback_action(const Polynomial& s, const CartierGenerator& gen,
                           const RelativeChart& chart);

struct TheoremBReport {
  Ideal base_tau;      // tau on the base, extended to the total ring
  Ideal total_tau;     // tau of the pulled-back data on the total ring
  bool equal = false;
};

TheoremBReport theorem_b_check(const CartierAlgebraSpec& alg, const MixedPair& pair,
                               const RelativeChart& chart, const TauOptions& opts = {});

struct SigmaPullbackReport {
  Ideal base_sigma;
  Ideal total_sigma;
  bool equal = false;
};

SigmaPullbackReport sigma_pullback_check(const CartierAlgebraSpec& alg,
                                         const RelativeChart& chart);

}  // namespace frobkit
