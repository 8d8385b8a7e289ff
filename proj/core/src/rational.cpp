#include "frobkit/rational.hpp"

#include <charconv>
#include <numeric>

#include "frobkit/error.hpp"
#include "frobkit/field.hpp"

namespace frobkit {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

namespace {

std::int64_t parse_int(std::string_view s, std::size_t offset) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("malformed integer '" + std::string(s) + "'", offset);
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
  auto num = parse_int(trim(text.substr(0, slash)), 0);
  auto den = parse_int(trim(text.substr(slash + 1)), slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor(const Rational& r) {
  auto n = r.numerator();
  auto d = r.denominator();
  auto q = n / d;
  if ((n % d != 0) && (n < 0)) --q;
  return q;
}

std::int64_t ceil(const Rational& r) { return -floor(-r); }

std::int64_t ceil_times_power(const Rational& t, std::uint64_t p, unsigned e) {
  i128 num = static_cast<i128>(t.numerator()) * checked_prime_power(p, e);
  i128 den = t.denominator();
  i128 q = num / den;
  if (num % den != 0 && num > 0) ++q;
  if (q > static_cast<i128>(INT64_MAX) || q < static_cast<i128>(INT64_MIN)) {
    throw ExponentOverflow();
  }
  return static_cast<std::int64_t>(q);
}

std::optional<unsigned> padic_exponent(const Rational& t, std::uint64_t p) {
  auto d = static_cast<std::uint64_t>(t.denominator());
  unsigned k = 0;
  while (d % p == 0) {
    d /= p;
    ++k;
  }
  if (d != 1) return std::nullopt;
  return k;
}

unsigned padic_period(const Rational& t, std::uint64_t p) {
  auto d = static_cast<std::uint64_t>(t.denominator());
  while (d % p == 0) d /= p;
  if (d == 1) return 1;
  // multiplicative order of p modulo d
  std::uint64_t x = p % d;
  unsigned s = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>((static_cast<u128>(x) * p) % d);
    ++s;
  }
  return s;
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace frobkit
