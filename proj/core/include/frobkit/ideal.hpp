#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "frobkit/polynomial.hpp"

namespace frobkit {

struct GroebnerOptions {
  // Upper bound on processed S-pairs per basis computation.
  std::size_t max_pairs = 200000;
};

// Reduced Groebner basis of the polynomials in the ring's term order: monic,
// sorted by increasing leading monomial; empty for the zero ideal and {1} for
// the unit ideal. Requires nonnegative exponents.
std::vector<Polynomial> groebner(std::vector<Polynomial> gens, const GroebnerOptions& opts = {});

// Fully reduced normal form of f modulo a Groebner basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

// 64-bit FNV-1a; used for stable class ids.
std::uint64_t content_hash(std::string_view text) noexcept;

// Ideal of a (Laurent) polynomial ring with a lazily computed, cached reduced
// Groebner basis. In a Laurent ring the cached basis is that of the
// contraction to the polynomial subring, which is again canonical.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> gens);
  static Ideal zero(Ring ring);
  static Ideal unit(Ring ring);
  static Ideal principal(const Polynomial& f);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }
  const std::vector<Polynomial>& basis() const;

  bool is_zero() const;
  bool is_unit() const;
  // All generators are nonzero scalar multiples of one polynomial.
  bool is_principal() const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;  // other is a subset of this

  // "[g1, g2, ...]" over the reduced basis.
  std::string to_string() const;
  std::uint64_t hash() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_eq(const Ideal& a, const Ideal& b);

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
// a^m; principal ideals use the Frobenius-split polynomial power.
Ideal power(const Ideal& a, std::uint64_t m);
// Ideal generated by g^(p^e) over the generators g.
Ideal frob_power(const Ideal& a, unsigned e);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal colon(const Ideal& a, const Polynomial& g);
// Throws InvalidArgument when b is the zero ideal.
Ideal colon(const Ideal& a, const Ideal& b);
// a : (product of all variables)^infinity.
Ideal saturate_variables(const Ideal& a);

// Unit test for the ideal generated by `gens` without a full basis when a
// shortcut applies (constant generator, or all generators homogeneous).
bool generates_unit(const std::vector<Polynomial>& gens);

}  // namespace frobkit
