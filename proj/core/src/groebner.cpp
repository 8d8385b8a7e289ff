#include <algorithm>

#include "frobkit/error.hpp"
#include "frobkit/ideal.hpp"

namespace frobkit {

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const Ring& ring, const GroebnerOptions& opts) : ring_(ring), opts_(opts) {}

  std::vector<Polynomial> run(std::vector<Polynomial> gens) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      auto r = top_reduce(g.monic());
      if (r.is_zero()) continue;
      if (r.is_constant()) return {Polynomial::constant(ring_, 1)};
      insert(r.monic());
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > opts_.max_pairs) {
        throw BudgetExceeded("Groebner basis exceeded " + std::to_string(opts_.max_pairs) +
                             " S-pairs");
      }
      auto best = std::min_element(pairs_.begin(), pairs_.end(),
                                   [this](const CriticalPair& a, const CriticalPair& b) {
                                     return ring_->compare(a.lcm, b.lcm) < 0;
                                   });
      CriticalPair pr = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      auto s = top_reduce(spoly(polys_[pr.i], polys_[pr.j], pr.lcm));
      if (s.is_zero()) continue;
      if (s.is_constant()) return {Polynomial::constant(ring_, 1)};
      insert(s.monic());
    }
    return finish();
  }

 private:
  Polynomial spoly(const Polynomial& f, const Polynomial& g, const Monomial& lcm) const {
    // both monic
    return f.shifted(mono_div(lcm, f.leading().mono)) - g.shifted(mono_div(lcm, g.leading().mono));
  }

  const Polynomial* find_reducer(const Monomial& m) const {
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k] && mono_divides(polys_[k].leading().mono, m, ring_->arity())) {
        return &polys_[k];
      }
    }
    return nullptr;
  }

  // reducers are monic
  Polynomial top_reduce(Polynomial f) const {
    while (!f.is_zero()) {
      const auto& lt = f.leading();
      const Polynomial* g = find_reducer(lt.mono);
      if (!g) break;
      f -= g->shifted(mono_div(lt.mono, g->leading().mono), lt.coeff);
    }
    return f;
  }

  // Gebauer-Moeller pair update.
  void insert(Polynomial h) {
    const auto n = ring_->arity();
    const std::size_t hi = polys_.size();
    const Monomial& lh = h.leading().mono;

    std::vector<CriticalPair> fresh;
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k]) fresh.push_back({k, hi, mono_lcm(polys_[k].leading().mono, lh)});
    }
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const auto& c = fresh[a];
      bool coprime = mono_coprime(polys_[c.i].leading().mono, lh, n);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = 0; b < fresh.size() && !dominated; ++b) {
          if (b == a) continue;
          const auto& d = fresh[b];
          if (mono_divides(d.lcm, c.lcm, n) && !(d.lcm == c.lcm && b > a)) dominated = true;
        }
        for (const auto& d : kept) {
          if (mono_divides(d.lcm, c.lcm, n)) dominated = true;
        }
      }
      if (!dominated) kept.push_back(c);
    }
    std::vector<CriticalPair> next;
    for (const auto& c : pairs_) {
      bool drop = mono_divides(lh, c.lcm, n) &&
                  !(mono_lcm(polys_[c.i].leading().mono, lh) == c.lcm) &&
                  !(mono_lcm(polys_[c.j].leading().mono, lh) == c.lcm);
      if (!drop) next.push_back(c);
    }
    for (const auto& c : kept) {
      if (!mono_coprime(polys_[c.i].leading().mono, lh, n)) next.push_back(c);
    }
    pairs_ = std::move(next);
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k] && mono_divides(lh, polys_[k].leading().mono, n)) active_[k] = false;
    }
    polys_.push_back(std::move(h));
    active_.push_back(true);
  }

  std::vector<Polynomial> finish() const {
    std::vector<Polynomial> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) minimal.push_back(polys_[k]);
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<Polynomial> others;
      for (std::size_t l = 0; l < minimal.size(); ++l) {
        if (l != k) others.push_back(minimal[l]);
      }
      const auto& lt = minimal[k].leading();
      Polynomial tail = minimal[k] - Polynomial::monomial(ring_, lt.mono, lt.coeff);
      reduced.push_back(Polynomial::monomial(ring_, lt.mono, 1) + normal_form(tail, others));
    }
    std::sort(reduced.begin(), reduced.end(), [this](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.leading().mono, b.leading().mono) < 0;
    });
    return reduced;
  }

  Ring ring_;
  GroebnerOptions opts_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  const auto& ring = f.ring();
  const auto& mod = ring->modulus();
  std::vector<Term> remainder;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const Term lt = rest.leading();
    const Polynomial* g = nullptr;
    for (const auto& b : basis) {
      if (mono_divides(b.leading().mono, lt.mono, ring->arity())) {
        g = &b;
        break;
      }
    }
    if (g) {
      Coeff c = mod.mul(lt.coeff, mod.inv(g->leading().coeff));
      rest -= g->shifted(mono_div(lt.mono, g->leading().mono), c);
    } else {
      remainder.push_back(lt);
      rest -= Polynomial::monomial(ring, lt.mono, lt.coeff);
    }
  }
  return Polynomial::from_terms(ring, std::move(remainder));
}

std::vector<Polynomial> groebner(std::vector<Polynomial> gens, const GroebnerOptions& opts) {
  if (gens.empty()) return {};
  Ring ring = gens.front().ring();
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    for (const auto& t : g.terms()) {
      for (std::size_t i = 0; i < ring->arity(); ++i) {
        if (t.mono.exp[i] < 0) throw InvalidArgument("Groebner bases need nonnegative exponents");
      }
    }
  }
  return Buchberger(ring, opts).run(std::move(gens));
}

std::uint64_t content_hash(std::string_view text) noexcept {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace frobkit
