#include "gml/qsym.hpp"

#include <numeric>
#include <sstream>

#include "gml/errors.hpp"

namespace gml {

namespace {

using Exponent = ClassFunction::Exponent;

RationalFunction x_power(Exponent e) { return RationalFunction(LaurentPoly::monomial(Rational(1), e)); }

}  // namespace

ClassFunction::ClassFunction() : classes_{RationalFunction()} {}

ClassFunction::ClassFunction(Exponent modulus, Exponent root_order, std::vector<RationalFunction> classes)
    : modulus_(modulus), root_order_(root_order), classes_(std::move(classes)) {
  if (modulus_ < 1 || root_order_ < 1) {
    throw Error(ErrorKind::Precondition, "modulus and root order must be positive");
  }
  if (classes_.size() != static_cast<std::size_t>(modulus_)) {
    throw Error(ErrorKind::Precondition, "class count differs from modulus");
  }

  Exponent g = root_order_;
  for (const auto& c : classes_) g = std::gcd(g, c.exponent_gcd());
  if (g > 1) {
    for (auto& c : classes_) c = c.compress_exponents(g);
    root_order_ /= g;
  }

  for (Exponent d = 1; d < modulus_; ++d) {
    if (modulus_ % d != 0) continue;
    bool periodic = true;
    for (Exponent j = d; j < modulus_ && periodic; ++j) {
      periodic = classes_[static_cast<std::size_t>(j)] == classes_[static_cast<std::size_t>(j % d)];
    }
    if (periodic) {
      classes_.resize(static_cast<std::size_t>(d));
      modulus_ = d;
      break;
    }
  }
}

ClassFunction ClassFunction::constant(const Rational& c) {
  return ClassFunction(1, 1, {RationalFunction::constant(c)});
}

ClassFunction ClassFunction::q_power(const Rational& c) {
  const auto n = to_int64(Rational(c.get_den()));
  const auto e = to_int64(Rational(c.get_num()));
  return ClassFunction(1, n, {x_power(e)});
}

ClassFunction ClassFunction::polynomial_in_Q(const LaurentPoly& p) { return ClassFunction(1, 1, {RationalFunction(p)}); }

ClassFunction ClassFunction::from_class_sums(Exponent modulus,
                                             const std::vector<std::vector<std::pair<Rational, Rational>>>& sums) {
  if (sums.size() != static_cast<std::size_t>(modulus)) {
    throw Error(ErrorKind::Precondition, "class sums do not match modulus");
  }
  Exponent n = 1;
  for (const auto& cls : sums) {
    for (const auto& [coeff, e] : cls) n = lcm64(n, to_int64(BigInt(e.get_den())));
  }
  std::vector<RationalFunction> classes;
  classes.reserve(sums.size());
  for (const auto& cls : sums) {
    LaurentPoly p;
    for (const auto& [coeff, e] : cls) p.add_term(coeff, to_int64(Rational(e * n)));
    classes.emplace_back(std::move(p));
  }
  return ClassFunction(modulus, n, std::move(classes));
}

bool ClassFunction::is_zero() const {
  for (const auto& c : classes_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool ClassFunction::is_laurent() const {
  for (const auto& c : classes_) {
    if (!c.is_laurent()) return false;
  }
  return true;
}

std::vector<RationalFunction> ClassFunction::expanded(Exponent modulus, Exponent root_order) const {
  if (modulus % modulus_ != 0 || root_order % root_order_ != 0) {
    throw Error(ErrorKind::Precondition, "expansion target is not a multiple");
  }
  const Exponent k = root_order / root_order_;
  std::vector<RationalFunction> scaled;
  scaled.reserve(classes_.size());
  for (const auto& c : classes_) scaled.push_back(k == 1 ? c : c.substitute_power(k));
  std::vector<RationalFunction> out;
  out.reserve(static_cast<std::size_t>(modulus));
  for (Exponent j = 0; j < modulus; ++j) out.push_back(scaled[static_cast<std::size_t>(j % modulus_)]);
  return out;
}

ClassFunction ClassFunction::scale_pow(const Rational& c) const {
  const Exponent n = lcm64(root_order_, to_int64(BigInt(c.get_den())));
  const Exponent shift = to_int64(Rational(c * n));
  auto classes = expanded(modulus_, n);
  for (auto& cls : classes) cls = cls.times_monomial(shift);
  return ClassFunction(modulus_, n, std::move(classes));
}

ClassFunction ClassFunction::scaled(const Rational& c) const {
  std::vector<RationalFunction> classes;
  classes.reserve(classes_.size());
  for (const auto& cls : classes_) classes.push_back(cls.scaled(c));
  return ClassFunction(modulus_, root_order_, std::move(classes));
}

namespace {

template <typename Op>
ClassFunction combine(const ClassFunction& a, const ClassFunction& b, Op op) {
  const Exponent m = lcm64(a.modulus(), b.modulus());
  const Exponent n = lcm64(a.root_order(), b.root_order());
  auto ca = a.expanded(m, n);
  const auto cb = b.expanded(m, n);
  for (std::size_t j = 0; j < ca.size(); ++j) ca[j] = op(ca[j], cb[j]);
  return ClassFunction(m, n, std::move(ca));
}

}  // namespace

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  return combine(a, b, [](const RationalFunction& x, const RationalFunction& y) { return x + y; });
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
  return combine(a, b, [](const RationalFunction& x, const RationalFunction& y) { return x - y; });
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  return combine(a, b, [](const RationalFunction& x, const RationalFunction& y) { return x * y; });
}

ClassFunction divide(const ClassFunction& a, const ClassFunction& b) {
  return combine(a, b, [](const RationalFunction& x, const RationalFunction& y) { return x / y; });
}

ClassFunction ring_op(RingOp op, const ClassFunction& a, const ClassFunction& b, const Rational& exponent) {
  switch (op) {
    case RingOp::Add: return a + b;
    case RingOp::Sub: return a - b;
    case RingOp::Mul: return a * b;
    case RingOp::Neg: return -a;
    case RingOp::ScalePow: return a.scale_pow(exponent);
  }
  throw Error(ErrorKind::Precondition, "unknown ring operation");
}

ClassFunction dual(const ClassFunction& f) {
  std::vector<RationalFunction> classes;
  classes.reserve(f.classes().size());
  for (const auto& c : f.classes()) classes.push_back(c.invert_variable());
  return ClassFunction(f.modulus(), f.root_order(), std::move(classes));
}

std::string ClassFunction::to_string() const {
  if (modulus_ == 1) return classes_.front().to_string("Q", root_order_);
  std::ostringstream os;
  for (Exponent j = 0; j < modulus_; ++j) {
    if (j > 0) os << "; ";
    os << "[r=" << j << " mod " << modulus_ << "] " << classes_[static_cast<std::size_t>(j)].to_string("Q", root_order_);
  }
  return os.str();
}

}  // namespace gml
