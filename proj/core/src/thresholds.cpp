#include "frobkit/thresholds.hpp"

#include "frobkit/error.hpp"
#include "frobkit/parallel.hpp"

namespace frobkit {

namespace {

Rational inverse_power(std::uint64_t p, unsigned k) {
  return Rational(1, checked_prime_power(p, k));
}

std::optional<std::int64_t> avoidance_hit(const Rational& c, std::uint64_t p, unsigned depth) {
  for (unsigned e = 1; e <= depth; ++e) {
    const auto q = checked_prime_power(p, e);
    // integer a with c*(q-1) < a < c*q
    const Rational lo = c * Rational(q - 1);
    const Rational hi = c * Rational(q);
    const auto a = floor(lo) + 1;
    if (Rational(a) < hi) return q;
  }
  return std::nullopt;
}

}  // namespace

MixedPair ThresholdProblem::at(const Rational& t) const {
  auto ideals = fixed_ideals;
  auto exps = fixed_exponents;
  ideals.push_back(free_ideal);
  exps.push_back(t);
  return MixedPair(std::move(ideals), std::move(exps));
}

ThresholdResult fpt_search(const ThresholdProblem& problem, const ThresholdOptions& opts) {
  const std::uint64_t p = problem.alg.ring->p();
  ThresholdResult res;
  auto eval = [&](const Rational& t) {
    bool unit = tau_is_unit(problem.at(t), problem.alg, opts.tau);
    res.transcript.push_back(ThresholdStep{t, unit});
    return unit;
  };
  if (!eval(Rational(0))) {
    throw InvalidArgument("test ideal is not the unit ideal at free exponent 0");
  }
  Rational hi(1);
  unsigned growth = 0;
  while (eval(hi)) {
    if (++growth > opts.max_growth) {
      throw BudgetExceeded("no drop of the test ideal below " + to_string(hi));
    }
    hi *= Rational(static_cast<std::int64_t>(p));
  }
  Rational lo(0);
  const Rational width = inverse_power(p, opts.depth);
  while (hi - lo > width) {
    const Rational step = (hi - lo) / Rational(static_cast<std::int64_t>(p));
    Rational next_lo = lo;
    Rational next_hi = hi;
    for (std::uint64_t k = 1; k < p; ++k) {
      Rational t = lo + step * Rational(static_cast<std::int64_t>(k));
      if (eval(t)) {
        next_lo = t;
      } else {
        next_hi = t;
        break;
      }
    }
    if (next_hi == hi) next_hi = next_lo + step;
    lo = next_lo;
    hi = next_hi;
  }
  res.lo = lo;
  res.hi = hi;
  if (auto k = padic_exponent(hi, p)) {
    Rational probe = hi - inverse_power(p, *k + opts.confirm_depth);
    if (probe >= 0 && eval(probe)) res.exact = hi;
  }
  res.inside_avoidance_window = avoidance_hit(res.exact ? *res.exact : hi, p, opts.depth);
  return res;
}

std::vector<ConstancyInterval> jumping_numbers(const ThresholdProblem& problem, const Rational& T,
                                               const ThresholdOptions& opts) {
  if (T < 0) throw InvalidArgument("range bound must be nonnegative");
  const std::uint64_t p = problem.alg.ring->p();
  const auto scale = checked_prime_power(p, opts.depth);
  const auto count = static_cast<std::size_t>(floor(T * Rational(scale))) + 1;
  std::vector<std::string> bases(count);
  std::vector<std::uint64_t> hashes(count);
  parallel_for(count, opts.jobs, [&](std::size_t m) {
    auto tau = tau_mixed(problem.at(Rational(static_cast<std::int64_t>(m), scale)), problem.alg,
                         opts.tau)
                   .ideal;
    bases[m] = tau.to_string();
    hashes[m] = tau.hash();
  });
  std::vector<ConstancyInterval> out;
  for (std::size_t m = 0; m < count; ++m) {
    Rational t(static_cast<std::int64_t>(m), scale);
    if (!out.empty() && out.back().hash == hashes[m]) {
      out.back().hi = t;
    } else {
      out.push_back(ConstancyInterval{t, t, hashes[m], bases[m]});
    }
  }
  return out;
}

ProbeResult jump_scaling_probe(const ThresholdProblem& problem, const Rational& t,
                               const Rational& T, const ThresholdOptions& opts) {
  if (t.numerator() == 0) return {ProbeOutcome::confirmed, "t = 0 is trivially fixed by scaling"};
  const std::uint64_t p = problem.alg.ring->p();
  // degree-e0 scaling multiplies exponents by p^e0
  const Rational factor(checked_prime_power(p, problem.alg.degree()));
  const Rational pt = t * factor;
  if (pt > T) return {ProbeOutcome::vacuous, "scaled point " + to_string(pt) + " lies outside the range"};

  ThresholdProblem scaled = problem;
  for (auto& s : scaled.fixed_exponents) s *= factor;
  const unsigned k = padic_exponent(t, p).value_or(0);
  const Rational delta = inverse_power(p, k + opts.depth);

  auto tau_at = [&](const ThresholdProblem& pr, const Rational& s) {
    return tau_mixed(pr.at(s), pr.alg, opts.tau).ideal;
  };
  const Ideal at_t = tau_at(problem, t);
  const Ideal below_t = tau_at(problem, t - delta);
  if (ideal_eq(at_t, below_t)) {
    return {ProbeOutcome::failed, to_string(t) + " is not a jump at this resolution"};
  }
  const Ideal at_pt = tau_at(scaled, pt);
  const Ideal below_pt = tau_at(scaled, pt - delta * factor);
  if (!ideal_eq(scale_test_ideal(at_pt, problem.alg), at_t) ||
      !ideal_eq(scale_test_ideal(below_pt, problem.alg), below_t)) {
    return {ProbeOutcome::failed, "scaling relation does not hold near " + to_string(t)};
  }
  if (ideal_eq(at_pt, below_pt)) {
    return {ProbeOutcome::failed, to_string(pt) + " is not a jump"};
  }
  return {ProbeOutcome::confirmed, to_string(pt) + " is a jump: " + below_pt.to_string() +
                                       " -> " + at_pt.to_string()};
}

const char* to_string(ProbeOutcome o) {
  switch (o) {
    case ProbeOutcome::confirmed: return "confirmed";
    case ProbeOutcome::vacuous: return "vacuous";
    case ProbeOutcome::failed: return "failed";
  }
  return "failed";
}

}  // namespace frobkit
