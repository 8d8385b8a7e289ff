#include "frobkit/cartier.hpp"

#include <numeric>

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

std::vector<std::size_t> prefix_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return m;
}

Polynomial principal_generator(const Ideal& ideal) {
  if (ideal.gens().empty()) return Polynomial(ideal.ring());
  if (ideal.gens().size() == 1) return ideal.gens().front();
  const auto& b = ideal.basis();
  if (b.size() != 1) throw InvalidArgument("ideal is not principal: " + ideal.to_string());
  return b.front();
}

Ideal scaled_ideal(const Ideal& ideal, const Polynomial& g) {
  std::vector<Polynomial> gens;
  gens.reserve(ideal.gens().size());
  for (const auto& u : ideal.gens()) gens.push_back(u * g);
  return Ideal(ideal.ring(), std::move(gens));
}

// Generators of the image of an ideal under one pulled-back generator.
std::vector<Polynomial> chart_image(const Ideal& ideal, const CartierGenerator& gen,
                                    const RelativeChart& chart) {
  const auto& base = chart.base;
  const std::size_t nb = base->arity();
  const auto q = checked_prime_power(base->p(), gen.level);
  std::vector<Polynomial> out;
  for (const auto& u : ideal.gens()) {
    auto d = decompose(u, gen.level, DecompositionMode::relative);
    for (const auto& [idx, pairs] : d.relative) {
      std::vector<Polynomial> roots;
      roots.reserve(pairs.size());
      for (const auto& pr : pairs) roots.push_back(gen.twist * chart.restrict(pr.r));
      // every base multiplier t^alpha with alpha in [0, q)^nb
      std::vector<std::int64_t> alpha(nb, 0);
      while (true) {
        Monomial m;
        for (std::size_t i = 0; i < nb; ++i) m.exp[i] = alpha[i];
        Polynomial elem(chart.total);
        for (std::size_t j = 0; j < pairs.size(); ++j) {
          auto tr = trace(roots[j].shifted(m), gen.level);
          if (!tr.is_zero()) elem += pairs[j].s * chart.extend(tr);
        }
        if (!elem.is_zero()) out.push_back(elem.monic());
        std::size_t k = 0;
        while (k < nb && ++alpha[k] == q) alpha[k++] = 0;
        if (k == nb) break;
      }
    }
  }
  return out;
}

bool padic_exact(const MixedPair& pair, std::uint64_t p, unsigned level) {
  for (const auto& t : pair.exponents) {
    auto k = padic_exponent(t, p);
    if (!k || *k > level) return false;
  }
  return true;
}

Ideal pair_power(const MixedPair& pair, const std::vector<std::int64_t>& u, bool principal) {
  const auto& ring = pair.ring();
  if (principal) {
    auto prod = Polynomial::constant(ring, 1);
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      prod = prod * pow(principal_generator(pair.ideals[i]), static_cast<std::uint64_t>(u[i]));
      if (prod.is_zero()) break;
    }
    return Ideal::principal(prod);
  }
  auto acc = Ideal::unit(ring);
  for (std::size_t i = 0; i < u.size(); ++i) {
    acc = product(acc, power(pair.ideals[i], static_cast<std::uint64_t>(u[i])));
  }
  return acc;
}

std::vector<std::int64_t> ceil_exponents(const MixedPair& pair, std::uint64_t p, unsigned level) {
  std::vector<std::int64_t> u;
  u.reserve(pair.exponents.size());
  for (const auto& t : pair.exponents) u.push_back(ceil_times_power(t, p, level));
  return u;
}

std::vector<std::int64_t> lowered(std::vector<std::int64_t> u) {
  for (auto& v : u) v = std::max<std::int64_t>(v - 1, 0);
  return u;
}

void validate_pair(const MixedPair& pair, const CartierAlgebraSpec& alg) {
  if (pair.ideals.empty()) throw InvalidArgument("mixed pair has no ideals");
  require_same_ring(pair.ring(), alg.ring);
  if (alg.ring->laurent()) throw InvalidArgument("test ideals need a polynomial ring");
}

}  // namespace

RelativeChart RelativeChart::make(const Ring& base, const std::vector<std::string>& fiber) {
  if (base->laurent()) throw InvalidArgument("chart base must be a polynomial ring");
  if (fiber.empty()) throw InvalidArgument("chart needs at least one fiber variable");
  auto names = base->names();
  names.insert(names.end(), fiber.begin(), fiber.end());
  RelativeChart c;
  c.base = base;
  c.total = RingCtx::make(std::move(names), base->modulus(), false, base->arity());
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    c.omega_tag += (i ? "^d" : "d") + fiber[i];
  }
  return c;
}

Polynomial RelativeChart::extend(const Polynomial& r) const {
  require_same_ring(r.ring(), base);
  auto map = prefix_map(base->arity());
  return r.embed(total, map);
}

Ideal RelativeChart::extend(const Ideal& ideal) const {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(extend(g));
  return Ideal(total, std::move(gens));
}

Polynomial RelativeChart::restrict(const Polynomial& s) const {
  require_same_ring(s.ring(), total);
  std::vector<Term> terms;
  terms.reserve(s.size());
  for (const auto& t : s.terms()) {
    for (std::size_t i = base->arity(); i < total->arity(); ++i) {
      if (t.mono.exp[i] != 0) throw InvalidArgument("polynomial involves fiber variables");
    }
    terms.push_back(t);
  }
  return Polynomial::from_terms(base, std::move(terms));
}

CartierAlgebraSpec CartierAlgebraSpec::make_full(Ring ring) {
  CartierAlgebraSpec s;
  s.ring = std::move(ring);
  s.full = true;
  return s;
}

CartierAlgebraSpec CartierAlgebraSpec::make(Ring ring, std::vector<CartierGenerator> generators) {
  if (generators.empty()) throw InvalidArgument("Cartier algebra needs a generator");
  for (const auto& g : generators) {
    if (g.level == 0) throw InvalidArgument("generator level must be positive");
    require_same_ring(ring, g.twist.ring());
  }
  CartierAlgebraSpec s;
  s.ring = std::move(ring);
  s.generators = std::move(generators);
  return s;
}

CartierAlgebraSpec CartierAlgebraSpec::parse(std::string_view text, const Ring& ring) {
  if (text == "full") return make_full(ring);
  std::vector<CartierGenerator> gens;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw InvalidArgument("algebra generator must look like LEVEL:EXPR, got '" +
                            std::string(item) + "'");
    }
    unsigned level = 0;
    try {
      level = static_cast<unsigned>(std::stoul(std::string(item.substr(0, colon))));
    } catch (const std::exception&) {
      throw InvalidArgument("bad generator level in '" + std::string(item) + "'");
    }
    gens.push_back(CartierGenerator{level, parse_poly(item.substr(colon + 1), ring)});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return make(ring, std::move(gens));
}

unsigned CartierAlgebraSpec::degree() const {
  if (full) return 1;
  unsigned d = generators.front().level;
  for (const auto& g : generators) {
    if (g.level != d) {
      throw InvalidArgument("Cartier algebra generated in several degrees is not supported");
    }
  }
  return d;
}

std::string CartierAlgebraSpec::to_string() const {
  if (full) return "full";
  std::string s;
  for (const auto& g : generators) {
    if (!s.empty()) s += ",";
    s += std::to_string(g.level) + ":" + g.twist.to_string();
  }
  return s;
}

MixedPair::MixedPair(std::vector<Ideal> ideals_, std::vector<Rational> exponents_)
    : ideals(std::move(ideals_)), exponents(std::move(exponents_)) {
  if (ideals.size() != exponents.size()) {
    throw InvalidArgument("mixed pair needs one exponent per ideal");
  }
  for (std::size_t i = 1; i < ideals.size(); ++i) require_same_ring(ideals[0].ring(), ideals[i].ring());
  for (const auto& t : exponents) {
    if (t < 0) throw InvalidArgument("mixed pair exponents must be nonnegative");
  }
}

bool MixedPair::all_principal() const {
  return std::all_of(ideals.begin(), ideals.end(), [](const Ideal& a) { return a.is_principal(); });
}

Ideal cplus(const Ideal& ideal, const CartierAlgebraSpec& alg) {
  require_same_ring(ideal.ring(), alg.ring);
  if (ideal.is_zero()) return ideal;
  if (alg.chart) {
    std::vector<Polynomial> gens;
    if (alg.full) {
      gens = chart_image(ideal, CartierGenerator{1, Polynomial::constant(alg.chart->base, 1)},
                         *alg.chart);
    } else {
      for (const auto& g : alg.generators) {
        auto part = chart_image(ideal, g, *alg.chart);
        gens.insert(gens.end(), part.begin(), part.end());
      }
    }
    return Ideal(alg.ring, std::move(gens));
  }
  if (alg.full) return bracket_root(ideal, 1);
  std::vector<Polynomial> gens;
  for (const auto& g : alg.generators) {
    auto part = bracket_root(scaled_ideal(ideal, g.twist), g.level).gens();
    gens.insert(gens.end(), part.begin(), part.end());
  }
  return Ideal(alg.ring, std::move(gens));
}

Ideal cartier_image(const Ideal& ideal, const CartierAlgebraSpec& alg, unsigned e) {
  if (alg.full && !alg.chart) {
    require_same_ring(ideal.ring(), alg.ring);
    return e == 0 ? ideal : bracket_root(ideal, e);
  }
  Ideal cur = ideal;
  for (unsigned i = 0; i < e; ++i) cur = cplus(cur, alg);
  return cur;
}

Ideal sigma(const CartierAlgebraSpec& alg, const Ideal& start, const SigmaOptions& opts) {
  Ideal cur = start;
  for (std::size_t i = 0; i < opts.max_iterations; ++i) {
    Ideal next = cplus(cur, alg);
    if (ideal_eq(next, cur)) return cur;
    cur = std::move(next);
  }
  throw BudgetExceeded("stable image not reached after " + std::to_string(opts.max_iterations) +
                       " iterations");
}

TauResult tau_mixed(const MixedPair& pair, const CartierAlgebraSpec& alg, const TauOptions& opts) {
  validate_pair(pair, alg);
  if (opts.conf == 0) throw InvalidArgument("confirmation steps must be at least 1");
  if (opts.start == 0) throw InvalidArgument("accumulation start index must be at least 1");
  const unsigned e0 = alg.degree();
  const std::uint64_t p = alg.ring->p();
  const bool principal = pair.all_principal();
  const bool certifiable = principal && alg.full;

  unsigned window = opts.conf;
  for (const auto& t : pair.exponents) window = std::max(window, padic_period(t, p));

  // On p-adic points the chain is exact from level max k on, and ascending
  // under the full algebra, so earlier levels add nothing.
  unsigned first = opts.start;
  if (certifiable) {
    unsigned kmax = 0;
    bool all_padic = true;
    for (const auto& t : pair.exponents) {
      auto k = padic_exponent(t, p);
      all_padic = all_padic && k.has_value();
      if (k) kmax = std::max(kmax, *k);
    }
    if (all_padic) first = std::max(first, (kmax + e0 - 1) / e0);
  }

  Ideal acc = Ideal::zero(alg.ring);
  unsigned unchanged = 0;
  for (unsigned e = first; e <= opts.max_level; ++e) {
    const unsigned level = e * e0;
    auto u = ceil_exponents(pair, p, level);
    Ideal image = cartier_image(pair_power(pair, u, principal), alg, e);
    Ideal next = sum(acc, image);
    const bool same = e > first && ideal_eq(next, acc);
    acc = std::move(next);

    if (certifiable) {
      if (acc.is_unit()) return TauResult{acc, e, true, "unit ideal reached"};
      if (padic_exact(pair, p, level)) {
        return TauResult{acc, e, true, "exact at p-adic level"};
      }
      Ideal upper = cartier_image(pair_power(pair, lowered(u), principal), alg, e);
      if (ideal_eq(upper, acc)) return TauResult{acc, e, true, "upper bound matches"};
      continue;
    }
    unchanged = same ? unchanged + 1 : 0;
    if (unchanged >= window) return TauResult{acc, e, false, "stable for confirmation window"};
  }
  throw BudgetExceeded("test ideal chain did not settle within " +
                       std::to_string(opts.max_level) + " levels");
}

bool tau_is_unit(const MixedPair& pair, const CartierAlgebraSpec& alg, const TauOptions& opts) {
  validate_pair(pair, alg);
  if (!(alg.full && !alg.chart && pair.all_principal())) {
    return tau_mixed(pair, alg, opts).ideal.is_unit();
  }
  const std::uint64_t p = alg.ring->p();
  unsigned first = 1;
  bool all_padic = true;
  for (const auto& t : pair.exponents) {
    auto k = padic_exponent(t, p);
    if (k) {
      first = std::max(first, *k);
    } else {
      all_padic = false;
    }
  }
  if (!all_padic) first = 1;
  std::vector<Polynomial> gens;
  gens.reserve(pair.ideals.size());
  for (const auto& a : pair.ideals) gens.push_back(principal_generator(a));
  auto product_at = [&](const std::vector<std::int64_t>& u) {
    auto prod = Polynomial::constant(alg.ring, 1);
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] != 0) prod = prod * pow(gens[i], static_cast<std::uint64_t>(u[i]));
    }
    return prod;
  };
  for (unsigned e = first; e <= opts.max_level; ++e) {
    auto u = ceil_exponents(pair, p, e);
    auto lower = product_at(u);
    if (lower.is_zero()) return false;
    if (generates_unit(root_components(lower, e))) return true;
    if (padic_exact(pair, p, e)) return false;
    if (!generates_unit(root_components(product_at(lowered(u)), e))) return false;
  }
  throw BudgetExceeded("unit test for the test ideal did not settle within " +
                       std::to_string(opts.max_level) + " levels");
}

SkodaStep skoda_reduce(const MixedPair& pair, std::size_t index) {
  if (index >= pair.ideals.size()) throw InvalidArgument("Skoda index out of range");
  const auto& a = pair.ideals[index];
  const std::int64_t ngens = a.is_principal() ? 1 : static_cast<std::int64_t>(a.gens().size());
  if (pair.exponents[index] < ngens) {
    throw InvalidArgument("Skoda reduction needs the exponent to be at least " +
                          std::to_string(ngens) + ", got " + to_string(pair.exponents[index]));
  }
  SkodaStep step{pair, a};
  step.reduced.exponents[index] -= 1;
  return step;
}

Ideal scale_test_ideal(const Ideal& tau, const CartierAlgebraSpec& alg) { return cplus(tau, alg); }

CartierAlgebraSpec pullback_cartier(const CartierAlgebraSpec& alg, const RelativeChart& chart) {
  if (alg.chart) throw InvalidArgument("algebra is already a pullback");
  if (!alg.ring->same_as(*chart.base)) {
    throw InvalidArgument("chart base " + chart.base->describe() + " does not match algebra ring " +
                          alg.ring->describe());
  }
  CartierAlgebraSpec s;
  s.ring = chart.total;
  s.full = alg.full;
  s.generators = alg.generators;
  s.chart = chart;
  return s;
}

Polynomial pullback_action(const Polynomial& s, const CartierGenerator& gen,
                           const RelativeChart& chart) {
  Polynomial out(chart.total);
  for (const auto& pr : relative_trace(s, gen.level)) {
    auto tr = trace(gen.twist * chart.restrict(pr.r), gen.level);
    if (!tr.is_zero()) out += pr.s * chart.extend(tr);
  }
  return out;
}

TheoremBReport theorem_b_check(const CartierAlgebraSpec& alg, const MixedPair& pair,
                               const RelativeChart& chart, const TauOptions& opts) {
  auto base_tau = chart.extend(tau_mixed(pair, alg, opts).ideal);
  std::vector<Ideal> ext;
  for (const auto& a : pair.ideals) ext.push_back(chart.extend(a));
  MixedPair total_pair(std::move(ext), pair.exponents);
  auto total_tau = tau_mixed(total_pair, pullback_cartier(alg, chart), opts).ideal;
  bool eq = ideal_eq(base_tau, total_tau);
  return TheoremBReport{std::move(base_tau), std::move(total_tau), eq};
}

SigmaPullbackReport sigma_pullback_check(const CartierAlgebraSpec& alg,
                                         const RelativeChart& chart) {
  auto base_sigma = chart.extend(sigma(alg, Ideal::unit(alg.ring)));
  auto total_sigma = sigma(pullback_cartier(alg, chart), Ideal::unit(chart.total));
  bool eq = ideal_eq(base_sigma, total_sigma);
  return SigmaPullbackReport{std::move(base_sigma), std::move(total_sigma), eq};
}

}  // namespace frobkit
