#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frobkit/field.hpp"

namespace frobkit {

inline constexpr std::size_t kMaxVars = 8;

// Exponent vector. Entries past the ring arity are always zero.
struct Monomial {
  std::array<std::int64_t, kMaxVars> exp{};

  std::int64_t& operator[](std::size_t i) { return exp[i]; }
  std::int64_t operator[](std::size_t i) const { return exp[i]; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 14695981039346656037ull;
    for (auto e : m.exp) {
      h ^= static_cast<std::uint64_t>(e);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Overflow-checked monomial arithmetic.
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // a - b, unchecked sign
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b, std::size_t arity);  // a | b
bool mono_coprime(const Monomial& a, const Monomial& b, std::size_t arity);

// Polynomial ring F_p[x_1..x_n] (optionally Laurent). The variables split into
// base variables [0, fiber_begin) and fiber variables [fiber_begin, n).
// Terms are ordered by graded reverse lexicographic order; auxiliary rings
// used for elimination put a leading block of `elim_block` variables first.
class RingCtx {
 public:
  static std::shared_ptr<const RingCtx> make(std::vector<std::string> names, PrimeModulus p,
                                             bool laurent = false, std::size_t fiber_begin = 0);

  // Same variables with `aux` new variables prepended and eliminated first.
  static std::shared_ptr<const RingCtx> elimination(const RingCtx& base,
                                                    std::vector<std::string> aux);

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t arity() const noexcept { return names_.size(); }
  const PrimeModulus& modulus() const noexcept { return modulus_; }
  Coeff p() const noexcept { return modulus_.value(); }
  bool laurent() const noexcept { return laurent_; }
  std::size_t fiber_begin() const noexcept { return fiber_begin_; }
  std::size_t fiber_count() const noexcept { return names_.size() - fiber_begin_; }
  std::size_t elim_block() const noexcept { return elim_block_; }

  std::optional<std::size_t> index_of(const std::string& name) const;

  // Three-way term order comparison: positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;

  // Structural identity (names, p, flags); two distinct contexts with the
  // same description are interchangeable.
  bool same_as(const RingCtx& other) const noexcept;

  std::string describe() const;

 private:
  RingCtx(std::vector<std::string> names, PrimeModulus p, bool laurent, std::size_t fiber_begin,
          std::size_t elim_block);

  std::vector<std::string> names_;
  PrimeModulus modulus_;
  bool laurent_;
  std::size_t fiber_begin_;
  std::size_t elim_block_;
};

using Ring = std::shared_ptr<const RingCtx>;

// Throws RingMismatch unless the rings describe the same ring.
void require_same_ring(const Ring& a, const Ring& b);

}  // namespace frobkit
