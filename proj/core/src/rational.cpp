#include "gml/rational.hpp"

#include <limits>
#include <numeric>

#include "gml/errors.hpp"

namespace gml {

namespace {

bool valid_integer_text(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::InvalidParams, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer_text(num) || (slash != std::string_view::npos && !valid_integer_text(den))) {
    throw Error(ErrorKind::ParseError, "not an exact rational: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Rational value;
  value.get_num() = BigInt(n);
  if (slash == std::string_view::npos) {
    value.get_den() = 1;
  } else {
    std::string d(den);
    if (!d.empty() && d[0] == '+') d.erase(0, 1);
    value.get_den() = BigInt(d);
    if (value.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::int64_t to_int64(const BigInt& value) {
  if (!value.fits_slong_p()) throw Error(ErrorKind::InvalidParams, "integer out of 64-bit range: " + value.get_str());
  return value.get_si();
}

std::int64_t to_int64(const Rational& value) {
  if (!is_integer(value)) throw Error(ErrorKind::InvalidParams, "expected an integer, got " + value.get_str());
  return to_int64(value.get_num());
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

}  // namespace gml
