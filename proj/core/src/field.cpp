#include "frobkit/field.hpp"

#include <string>

#include "frobkit/error.hpp"

namespace frobkit {

__extension__ using u128 = unsigned __int128;

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31)) {
    throw InvalidArgument("characteristic must satisfy 2 <= p < 2^31, got " + std::to_string(p));
  }
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  p_ = static_cast<Coeff>(p);
}

void PrimeModulus::require_odd(const char* who) const {
  if (p_ == 2) throw OddPrimeRequired(std::string(who) + " requires an odd prime");
}

Coeff PrimeModulus::pow(Coeff a, std::uint64_t m) const noexcept {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (m > 0) {
    if (m & 1) result = mul(result, base);
    base = mul(base, base);
    m >>= 1;
  }
  return result;
}

Coeff PrimeModulus::inv(Coeff a) const {
  if (a % p_ == 0) throw InvalidArgument("division by zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::int64_t checked_prime_power(std::uint64_t p, unsigned e) {
  u128 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= p;
    if (r > (static_cast<u128>(1) << 62)) throw ExponentOverflow();
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace frobkit
