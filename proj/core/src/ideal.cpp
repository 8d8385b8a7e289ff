#include "frobkit/ideal.hpp"

#include <algorithm>

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

std::vector<std::size_t> shift_map(std::size_t arity, std::size_t by) {
  std::vector<std::size_t> m(arity);
  for (std::size_t i = 0; i < arity; ++i) m[i] = i + by;
  return m;
}

// Elements of an elimination basis that do not involve the first `k`
// variables, mapped back to `target`.
std::vector<Polynomial> eliminate(std::vector<Polynomial> gens, const Ring& aux, std::size_t k,
                                  const Ring& target) {
  auto gb = groebner(std::move(gens));
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(), [k](const Term& t) {
      for (std::size_t i = 0; i < k; ++i) {
        if (t.mono.exp[i] != 0) return false;
      }
      return true;
    });
    if (!free) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m;
      for (std::size_t i = k; i < aux->arity(); ++i) m.exp[i - k] = t.mono.exp[i];
      terms.push_back(Term{m, t.coeff});
    }
    out.push_back(Polynomial::from_terms(target, std::move(terms)));
  }
  std::sort(out.begin(), out.end(), [&target](const Polynomial& a, const Polynomial& b) {
    return target->compare(a.leading().mono, b.leading().mono) > 0;
  });
  return out;
}

Polynomial variables_product(const Ring& ring) {
  Monomial m;
  for (std::size_t i = 0; i < ring->arity(); ++i) m.exp[i] = 1;
  return Polynomial::monomial(ring, m);
}

std::vector<Polynomial> saturated_basis(const Ring& ring, const std::vector<Polynomial>& gens) {
  auto aux = RingCtx::elimination(*ring, {"_sat"});
  auto map = shift_map(ring->arity(), 1);
  std::vector<Polynomial> lifted;
  for (const auto& g : gens) {
    if (!g.is_zero()) lifted.push_back(clear_denominators(g).embed(aux, map));
  }
  if (lifted.empty()) return {};
  Monomial t;
  t.exp[0] = 1;
  lifted.push_back(Polynomial::constant(aux, 1) -
                   variables_product(ring).embed(aux, map).shifted(t));
  return eliminate(std::move(lifted), aux, 1, ring);
}

}  // namespace

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::zero(Ring ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::unit(Ring ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::principal(const Polynomial& f) { return Ideal(f.ring(), {f}); }

const std::vector<Polynomial>& Ideal::basis() const {
  std::call_once(cache_->once, [this] {
    if (ring_->laurent()) {
      cache_->basis = saturated_basis(ring_, gens_);
    } else {
      cache_->basis = groebner(gens_);
    }
  });
  return cache_->basis;
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().is_constant();
}

bool Ideal::is_principal() const {
  if (gens_.size() <= 1) return true;
  auto first = gens_.front().monic();
  if (std::all_of(gens_.begin(), gens_.end(),
                  [&first](const Polynomial& g) { return g.monic() == first; })) {
    return true;
  }
  return basis().size() <= 1;
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(ring_, f.ring());
  if (f.is_zero()) return true;
  const auto& b = basis();
  if (b.empty()) return false;
  auto g = ring_->laurent() ? clear_denominators(f) : f;
  return normal_form(g, b).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [this](const Polynomial& g) { return contains(g); });
}

std::string Ideal::to_string() const {
  std::string s = "[";
  const auto& b = basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ", ";
    s += b[i].to_string();
  }
  return s + "]";
}

std::uint64_t Ideal::hash() const { return content_hash(to_string()); }

bool ideal_eq(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const auto& x = a.basis();
  const auto& y = b.basis();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] == y[i])) return false;
  }
  return true;
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  auto gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& f : a.gens()) {
    for (const auto& g : b.gens()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal power(const Ideal& a, std::uint64_t m) {
  if (m == 0) return Ideal::unit(a.ring());
  if (a.is_zero()) return a;
  if (a.gens().size() == 1) return Ideal::principal(pow(a.gens().front(), m));
  if (!a.ring()->laurent() && a.basis().size() == 1) {
    return Ideal::principal(pow(a.basis().front(), m));
  }
  // Non-principal ideals: (I^k)^p strictly contains (I^k)^[p] in general, so
  // square-and-multiply on honest products.
  Ideal result = Ideal::unit(a.ring());
  Ideal base = a;
  while (m > 0) {
    if (m & 1) result = Ideal(a.ring(), product(result, base).basis());
    m >>= 1;
    if (m > 0) base = Ideal(a.ring(), product(base, base).basis());
  }
  return result;
}

Ideal frob_power(const Ideal& a, unsigned e) {
  std::vector<Polynomial> gens;
  gens.reserve(a.gens().size());
  for (const auto& g : a.gens()) gens.push_back(frob(g, e));
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const auto& ring = a.ring();
  auto aux = RingCtx::elimination(*ring, {"_int"});
  auto map = shift_map(ring->arity(), 1);
  Monomial t;
  t.exp[0] = 1;
  auto tpoly = Polynomial::monomial(aux, t);
  auto one_minus_t = Polynomial::constant(aux, 1) - tpoly;
  std::vector<Polynomial> lifted;
  for (const auto& g : a.basis()) lifted.push_back(g.embed(aux, map) * tpoly);
  for (const auto& g : b.basis()) lifted.push_back(g.embed(aux, map) * one_minus_t);
  return Ideal(ring, eliminate(std::move(lifted), aux, 1, ring));
}

Ideal colon(const Ideal& a, const Polynomial& g) {
  require_same_ring(a.ring(), g.ring());
  if (g.is_zero()) throw InvalidArgument("colon by the zero ideal");
  if (a.is_zero()) return a;
  auto gg = a.ring()->laurent() ? clear_denominators(g) : g;
  if (gg.is_unit()) return a;
  auto both = intersect(a, Ideal::principal(gg));
  std::vector<Polynomial> gens;
  for (const auto& h : both.basis()) {
    auto q = divide_exact(h, gg);
    if (!q) throw InternalError("intersection element not divisible in colon computation");
    gens.push_back(*q);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal colon(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw InvalidArgument("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : b.basis()) {
    auto c = colon(a, g);
    acc = acc ? intersect(*acc, c) : c;
    if (acc->is_zero()) break;
  }
  return *acc;
}

Ideal saturate_variables(const Ideal& a) {
  return Ideal(a.ring(), saturated_basis(a.ring(), a.gens()));
}

bool generates_unit(const std::vector<Polynomial>& gens) {
  if (gens.empty()) return false;
  const auto& ring = gens.front().ring();
  bool all_homogeneous = true;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return true;
    if (ring->laurent() && g.is_monomial()) return true;
    all_homogeneous = all_homogeneous && g.is_homogeneous();
  }
  if (all_homogeneous && !ring->laurent()) return false;
  return Ideal(ring, gens).is_unit();
}

}  // namespace frobkit
