#include "frobkit/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

void sort_terms(const RingCtx& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [&ring](const Term& a, const Term& b) {
    return ring.compare(a.mono, b.mono) > 0;
  });
}

void check_signs(const RingCtx& ring, const Monomial& m) {
  if (ring.laurent()) return;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (m.exp[i] < 0) {
      throw InvalidArgument("negative exponent of " + ring.names()[i] + " in a non-Laurent ring");
    }
  }
}

}  // namespace

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(Ring ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(Ring ring, std::int64_t c) {
  Coeff r = ring->modulus().reduce(c);
  if (r == 0) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), {Term{Monomial{}, r}});
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring->arity()) throw InvalidArgument("variable index out of range");
  Monomial m;
  m.exp[index] = 1;
  return Polynomial(std::move(ring), {Term{m, 1}});
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, Coeff c) {
  check_signs(*ring, m);
  c %= ring->p();
  if (c == 0) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), {Term{m, c}});
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  const auto& mod = ring->modulus();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(terms.size());
  for (const auto& t : terms) {
    check_signs(*ring, t.mono);
    auto [it, inserted] = acc.try_emplace(t.mono, t.coeff % mod.value());
    if (!inserted) it->second = mod.add(it->second, t.coeff % mod.value());
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (c != 0) out.push_back(Term{m, c});
  }
  sort_terms(*ring, out);
  return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono == Monomial{});
}

bool Polynomial::is_unit() const noexcept {
  if (terms_.size() != 1) return false;
  return ring_->laurent() || terms_.front().mono == Monomial{};
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  auto deg = [this](const Monomial& m) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < ring_->arity(); ++i) d += m.exp[i];
    return d;
  };
  auto d0 = deg(terms_.front().mono);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return deg(t.mono) == d0; });
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t best = INT64_MIN;
  for (const auto& t : terms_) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < ring_->arity(); ++i) d += t.mono.exp[i];
    best = std::max(best, d);
  }
  return terms_.empty() ? -1 : best;
}

Monomial Polynomial::min_exponents() const {
  Monomial m;
  if (terms_.empty()) return m;
  m = terms_.front().mono;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = std::min(m.exp[i], t.mono.exp[i]);
  }
  return m;
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = ring_->modulus().neg(t.coeff);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::combine(const Polynomial& o, bool subtract) const {
  require_same_ring(ring_, o.ring_);
  const auto& mod = ring_->modulus();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) {
      c = -1;
    } else if (j == o.terms_.size()) {
      c = 1;
    } else {
      c = ring_->compare(terms_[i].mono, o.terms_[j].mono);
    }
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      Coeff v = subtract ? mod.neg(o.terms_[j].coeff) : o.terms_[j].coeff;
      out.push_back(Term{o.terms_[j].mono, v});
      ++j;
    } else {
      Coeff v = subtract ? mod.sub(terms_[i].coeff, o.terms_[j].coeff)
                         : mod.add(terms_[i].coeff, o.terms_[j].coeff);
      if (v != 0) out.push_back(Term{terms_[i].mono, v});
      ++i;
      ++j;
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  *this = combine(o, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  *this = combine(o, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (a.size() == 1) return b.shifted(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.size() == 1) return a.shifted(b.terms_[0].mono, b.terms_[0].coeff);
  const auto& mod = a.ring_->modulus();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      auto m = mono_mul(s.mono, t.mono);
      Coeff c = mod.mul(s.coeff, t.coeff);
      auto [it, inserted] = acc.try_emplace(m, c);
      if (!inserted) it->second = mod.add(it->second, c);
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (c != 0) out.push_back(Term{m, c});
  }
  sort_terms(*a.ring_, out);
  return Polynomial(a.ring_, std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_.get() != b.ring_.get() && !a.ring_->same_as(*b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::scaled(Coeff c) const {
  const auto& mod = ring_->modulus();
  c %= mod.value();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = mod.mul(t.coeff, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::shifted(const Monomial& m, Coeff c) const {
  const auto& mod = ring_->modulus();
  c %= mod.value();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto mm = mono_mul(t.mono, m);
    check_signs(*ring_, mm);
    out.push_back(Term{mm, mod.mul(t.coeff, c)});
  }
  // the term orders used here are translation invariant
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  return scaled(ring_->modulus().inv(terms_.front().coeff));
}

Polynomial Polynomial::embed(const Ring& target, std::span<const std::size_t> var_map) const {
  if (var_map.size() != ring_->arity()) throw InvalidArgument("variable map has wrong length");
  if (target->p() != ring_->p()) throw RingMismatch();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
      if (var_map[i] >= target->arity()) throw InvalidArgument("variable map out of range");
      m.exp[var_map[i]] += t.mono.exp[i];
    }
    out.push_back(Term{m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::rebind(const Ring& target) const {
  if (target->arity() != ring_->arity()) throw RingMismatch();
  std::vector<std::size_t> id(ring_->arity());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return embed(target, id);
}

std::string monomial_to_string(const RingCtx& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.names()[i];
    if (m.exp[i] != 1) s += "^" + std::to_string(m.exp[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    bool unit_mono = t.mono == Monomial{};
    if (unit_mono) {
      s += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      s += monomial_to_string(*ring_, t.mono);
    } else {
      s += std::to_string(t.coeff) + "*" + monomial_to_string(*ring_, t.mono);
    }
  }
  return s;
}

Polynomial pow(const Polynomial& f, std::uint64_t m) {
  const auto p = f.ring()->p();
  if (m == 0) return Polynomial::constant(f.ring(), 1);
  if (f.is_zero()) return f;
  if (f.is_monomial()) {
    const auto& t = f.leading();
    Monomial mm;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (m > static_cast<std::uint64_t>(INT64_MAX) ||
          __builtin_mul_overflow(t.mono.exp[i], static_cast<std::int64_t>(m), &mm.exp[i])) {
        throw ExponentOverflow();
      }
    }
    return Polynomial::monomial(f.ring(), mm, f.ring()->modulus().pow(t.coeff, m));
  }
  Polynomial low = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  for (std::uint64_t r = m % p; r > 0; r >>= 1) {
    if (r & 1) low *= base;
    if (r > 1) base *= base;
  }
  if (m < p) return low;
  return low * frob(pow(f, m / p), 1);
}

Polynomial frob(const Polynomial& f, unsigned e) {
  const std::int64_t q = checked_prime_power(f.ring()->p(), e);
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (__builtin_mul_overflow(t.mono.exp[i], q, &m.exp[i])) throw ExponentOverflow();
    }
    // c^(p^e) = c in F_p
    out.push_back(Term{m, t.coeff});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.ring()->arity()) throw InvalidArgument("variable index out of range");
  const auto& mod = f.ring()->modulus();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Coeff k = mod.reduce(t.mono.exp[var]);
    if (k == 0) continue;
    Monomial m = t.mono;
    m.exp[var] -= 1;
    out.push_back(Term{m, mod.mul(t.coeff, k)});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial clear_denominators(const Polynomial& f) {
  auto lo = f.min_exponents();
  Monomial shift;
  bool any = false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (lo.exp[i] < 0) {
      shift.exp[i] = -lo.exp[i];
      any = true;
    }
  }
  return any ? f.shifted(shift) : f;
}

namespace {

// Division of polynomials with nonnegative exponents in the ring's term order.
std::optional<Polynomial> divide_polynomial(Polynomial f, const Polynomial& g) {
  const auto& ring = f.ring();
  const auto& mod = ring->modulus();
  const auto& lg = g.leading();
  Coeff inv_lc = mod.inv(lg.coeff);
  std::vector<Term> quotient;
  while (!f.is_zero()) {
    const auto& lf = f.leading();
    if (!mono_divides(lg.mono, lf.mono, ring->arity())) return std::nullopt;
    Monomial m = mono_div(lf.mono, lg.mono);
    Coeff c = mod.mul(lf.coeff, inv_lc);
    quotient.push_back(Term{m, c});
    f -= g.shifted(m, c);
  }
  return Polynomial::from_terms(ring, std::move(quotient));
}

}  // namespace

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (f.is_zero()) return f;
  if (!f.ring()->laurent()) return divide_polynomial(f, g);
  // In a Laurent ring the lowest exponent of a product is the sum of the
  // lowest exponents, so both sides can be normalized to min exponent 0.
  auto fmin = f.min_exponents();
  auto gmin = g.min_exponents();
  Monomial fshift;
  Monomial gshift;
  Monomial back;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    fshift.exp[i] = -fmin.exp[i];
    gshift.exp[i] = -gmin.exp[i];
    back.exp[i] = fmin.exp[i] - gmin.exp[i];
  }
  auto q = divide_polynomial(f.shifted(fshift), g.shifted(gshift));
  if (!q) return std::nullopt;
  return q->shifted(back);
}

}  // namespace frobkit
