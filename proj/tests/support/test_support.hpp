#pragma once

#include <frobkit/frobkit.hpp>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace frobkit::testing {

inline Ring ring(std::uint64_t p, std::vector<std::string> vars, bool laurent = false,
                 std::size_t fiber_begin = 0) {
  return RingCtx::make(std::move(vars), PrimeModulus(p), laurent, fiber_begin);
}

inline Ideal ideal(const Ring& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_poly(g, r));
  return Ideal(r, ps);
}

inline Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

// Uniform random polynomial with exponents in [lo, hi] per variable.
inline Polynomial random_poly(const Ring& r, std::mt19937_64& rng, std::size_t terms,
                              std::int64_t hi, std::int64_t lo = 0) {
  const auto p = r->modulus().value();
  std::uniform_int_distribution<std::int64_t> ex(lo, hi);
  std::uniform_int_distribution<std::int64_t> co(1, p - 1);
  std::vector<Term> ts;
  for (std::size_t k = 0; k < terms; ++k) {
    Monomial m;
    for (std::size_t i = 0; i < r->arity(); ++i) m[i] = ex(rng);
    ts.push_back({m, static_cast<Coeff>(co(rng))});
  }
  return Polynomial::from_terms(r, std::move(ts));
}

// Dense reference model: monomial -> coefficient mod p.
using Dense = std::map<std::vector<std::int64_t>, std::int64_t>;

inline Dense dense(const Polynomial& f) {
  Dense d;
  const auto n = f.ring()->arity();
  for (const auto& t : f.terms()) {
    d[std::vector<std::int64_t>(t.mono.exp.begin(), t.mono.exp.begin() + n)] = t.coeff;
  }
  return d;
}

inline Dense dense_mul(const Dense& a, const Dense& b, std::int64_t p) {
  Dense out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      auto m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out[m] = (out[m] + ca * cb) % p;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace frobkit::testing
