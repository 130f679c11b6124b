#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gml {

using BigInt = mpz_class;
/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// num/den in lowest terms. The two-argument mpq_class constructor does not
/// reduce, so prefer this for computed fractions.
Rational ratio(const BigInt& num, const BigInt& den);

Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// Converts an integral rational that fits in 64 bits; throws otherwise.
std::int64_t to_int64(const Rational& value);
std::int64_t to_int64(const BigInt& value);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

/// Non-negative remainder.
inline std::int64_t mod64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace gml
