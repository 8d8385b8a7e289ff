#pragma once

#include <cstdint>

namespace frobkit {

using Coeff = std::uint32_t;

// The characteristic p of the ground field F_p. Primality is checked on
// construction; 2 <= p < 2^31.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  Coeff value() const noexcept { return p_; }
  bool is_odd() const noexcept { return p_ != 2; }
  // Throws OddPrimeRequired for p = 2.
  void require_odd(const char* who) const;

  Coeff reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t m) const noexcept;
  // Inverse of a nonzero residue; throws InvalidArgument on zero.
  Coeff inv(Coeff a) const;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  Coeff p_;
};

bool is_prime(std::uint64_t n) noexcept;

// p^e, throwing ExponentOverflow past 2^62.
std::int64_t checked_prime_power(std::uint64_t p, unsigned e);

}  // namespace frobkit
