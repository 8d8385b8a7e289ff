#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace frobkit {

using Rational = boost::rational<std::int64_t>;

// Accepts "NUM/DEN" or "NUM".
Rational parse_rational(std::string_view text);
// Always "NUM/DEN", in lowest terms with positive denominator.
std::string to_string(const Rational& r);

std::int64_t floor(const Rational& r);
std::int64_t ceil(const Rational& r);

// ceil(t * p^e), computed without intermediate overflow.
std::int64_t ceil_times_power(const Rational& t, std::uint64_t p, unsigned e);

// k such that the reduced denominator of t is p^k, if it is a p-power.
std::optional<unsigned> padic_exponent(const Rational& t, std::uint64_t p);

// Period of the p-adic digit expansion of the fractional part of t once the
// p-part of the denominator is stripped (1 for p-adic rationals).
unsigned padic_period(const Rational& t, std::uint64_t p);

double to_double(const Rational& r);

}  // namespace frobkit
