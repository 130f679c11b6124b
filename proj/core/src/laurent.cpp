#include "gml/laurent.hpp"

#include <numeric>
#include <sstream>

#include "gml/errors.hpp"

namespace gml {

LaurentPoly::LaurentPoly(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::constant(const Rational& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Rational& c, Exponent e) {
  LaurentPoly p;
  p.add_term(c, e);
  return p;
}

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

LaurentPoly::Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::Precondition, "min_exponent of zero polynomial");
  return terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::Precondition, "max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& LaurentPoly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::Precondition, "leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

const Rational& LaurentPoly::trailing_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::Precondition, "trailing coefficient of zero polynomial");
  return terms_.begin()->second;
}

Rational LaurentPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Rational& c, Exponent e) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly::Exponent LaurentPoly::exponent_gcd() const {
  Exponent g = 0;
  for (const auto& [e, c] : terms_) g = std::gcd(g, e);
  return g;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  LaurentPoly out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, coeff * c);
  return out;
}

LaurentPoly LaurentPoly::shifted(Exponent by) const {
  LaurentPoly out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + by, coeff);
  return out;
}

LaurentPoly LaurentPoly::substitute_power(Exponent k) const {
  if (k == 0) throw Error(ErrorKind::Precondition, "substitute_power with k = 0");
  LaurentPoly out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e * k, coeff);
  return out;
}

LaurentPoly LaurentPoly::compress_exponents(Exponent k) const {
  if (k <= 0) throw Error(ErrorKind::Precondition, "compress_exponents with k <= 0");
  LaurentPoly out;
  for (const auto& [e, coeff] : terms_) {
    if (e % k != 0) throw Error(ErrorKind::Precondition, "exponent not divisible in compress_exponents");
    out.terms_.emplace_hint(out.terms_.end(), e / k, coeff);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(-c, e);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea + eb);
  }
  return out;
}

namespace {

std::string exponent_text(LaurentPoly::Exponent e, LaurentPoly::Exponent unit) {
  Rational r(BigInt(static_cast<long>(e)), BigInt(static_cast<long>(unit)));
  r.canonicalize();
  if (is_integer(r)) return r.get_str();
  return "(" + r.get_str() + ")";
}

}  // namespace

std::string LaurentPoly::to_string(const std::string& var, Exponent unit) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (e != unit) os << "^" << exponent_text(e, unit);
  }
  return os.str();
}

}  // namespace gml
