#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobkit/ring.hpp"

namespace frobkit {

struct Term {
  Monomial mono;
  Coeff coeff;
};

// Sparse (Laurent) polynomial over F_p. Terms are kept sorted by decreasing
// term order with no zero coefficients, so structural equality is equality.
class Polynomial {
 public:
  explicit Polynomial(Ring ring);

  static Polynomial constant(Ring ring, std::int64_t c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial monomial(Ring ring, const Monomial& m, Coeff c = 1);
  // Sorts, merges equal monomials and drops zeros. Validates exponent signs.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;  // includes zero
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  // Nonzero scalar, or in a Laurent ring a scalar times a monomial.
  bool is_unit() const noexcept;
  bool is_homogeneous() const noexcept;
  const Term& leading() const { return terms_.front(); }
  std::int64_t total_degree() const;
  // Componentwise minimum of exponents over all terms (zero for the zero polynomial).
  Monomial min_exponents() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(Coeff c) const;
  Polynomial shifted(const Monomial& m, Coeff c = 1) const;  // c * x^m * this
  Polynomial monic() const;                                  // leading coefficient 1

  // Moves the polynomial into `target`, sending variable i to var_map[i].
  Polynomial embed(const Ring& target, std::span<const std::size_t> var_map) const;
  // Same, with the identity variable map (target must have the same arity).
  Polynomial rebind(const Ring& target) const;

  std::string to_string() const;

 private:
  Polynomial(Ring ring, std::vector<Term> sorted_terms);
  Polynomial combine(const Polynomial& o, bool subtract) const;

  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial parse_poly(std::string_view text, const Ring& ring);

// f^m via f^m = f^(m mod p) * frob(f^(m div p), 1).
Polynomial pow(const Polynomial& f, std::uint64_t m);
// f^(p^e): multiplies every exponent vector by p^e.
Polynomial frob(const Polynomial& f, unsigned e);
Polynomial partial_derivative(const Polynomial& f, std::size_t var);

// f / g when g divides f (Laurent rings: up to monomial units), else nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

// Multiplies by the smallest monomial making all exponents nonnegative.
Polynomial clear_denominators(const Polynomial& f);

std::string monomial_to_string(const RingCtx& ring, const Monomial& m);

}  // namespace frobkit
