#include <mpfr.h>

#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "gml/errors.hpp"
#include "gml/qsym.hpp"

namespace gml {

namespace {

using Exponent = ClassFunction::Exponent;

int mobius(Exponent n) {
  int result = 1;
  for (Exponent p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

// sum over primitive n-th roots of unity z of z^j.
Exponent ramanujan_sum(Exponent n, Exponent j) {
  const Exponent g = std::gcd(n, mod64(j, n));
  Exponent total = 0;
  for (Exponent k = 1; k <= g; ++k) {
    if (g % k == 0) total += mobius(n / k) * k;
  }
  return total;
}

Exponent den_of(const Rational& r) { return to_int64(BigInt(r.get_den())); }

}  // namespace

ClassFunction from_terms(Exponent modulus, std::span<const ExpTerm> terms, const std::optional<Rational>& den_exp) {
  if (modulus < 1) throw Error(ErrorKind::InvalidParams, "modulus must be positive");
  if (den_exp && *den_exp == 0) throw Error(ErrorKind::ZeroDenominatorExponent, "denominator exponent must be nonzero");

  // Root-of-unity coefficient vectors, grouped by q-exponent.
  std::map<Rational, std::vector<Rational>> groups;
  Exponent n = den_exp ? den_of(*den_exp) : 1;
  for (const auto& t : terms) {
    auto& vec = groups.try_emplace(t.q_exp, std::vector<Rational>(static_cast<std::size_t>(modulus), Rational(0)))
                    .first->second;
    vec[static_cast<std::size_t>(mod64(t.root_exp, modulus))] += t.coeff;
    n = lcm64(n, den_of(t.q_exp));
  }

  // Rational values on every class iff coefficients are constant on the
  // Galois orbits b -> u b, u a unit mod M.
  for (const auto& [q_exp, coeffs] : groups) {
    for (Exponent b = 0; b < modulus; ++b) {
      for (Exponent u = 2; u < modulus; ++u) {
        if (std::gcd(u, modulus) != 1) continue;
        if (coeffs[static_cast<std::size_t>(b)] != coeffs[static_cast<std::size_t>((b * u) % modulus)]) {
          throw Error(ErrorKind::NonRealInput, "term list is not rational on every residue class");
        }
      }
    }
  }

  RationalFunction den_poly = RationalFunction::constant(Rational(1));
  if (den_exp) {
    LaurentPoly d = LaurentPoly::monomial(Rational(1), to_int64(Rational(*den_exp * n)));
    d.add_term(Rational(-1), 0);
    den_poly = RationalFunction(LaurentPoly::constant(Rational(1)), d);
  }

  std::vector<RationalFunction> classes;
  classes.reserve(static_cast<std::size_t>(modulus));
  for (Exponent j = 0; j < modulus; ++j) {
    LaurentPoly num;
    for (const auto& [q_exp, coeffs] : groups) {
      Rational value(0);
      for (Exponent d = 1; d <= modulus; ++d) {
        if (modulus % d != 0) continue;
        const Exponent rep = d % modulus;  // d = M stands for b = 0
        value += coeffs[static_cast<std::size_t>(rep)] * ramanujan_sum(modulus / d, j);
      }
      num.add_term(value, to_int64(Rational(q_exp * n)));
    }
    classes.push_back(RationalFunction(num) * den_poly);
  }
  return ClassFunction(modulus, n, std::move(classes));
}

ClassFunction geometric_sum(const LaurentPoly& coeff, const Rational& a, const Rational& b, std::int64_t i0,
                            std::optional<std::int64_t> i1) {
  if (coeff.is_zero() || (i1 && *i1 < i0)) return {};
  const Exponent n = lcm64(den_of(a), den_of(b));
  const LaurentPoly c = coeff.substitute_power(n);
  const Exponent step = to_int64(Rational(a * n));
  const Exponent offset = to_int64(Rational(b * n));

  if (!i1) {
    if (a >= 0) {
      throw Error(ErrorKind::DivergentSeries, "geometric ratio Q^(" + to_string(a) + ") does not decay");
    }
    // c x^(step i0 + offset) / (1 - x^step), step < 0
    LaurentPoly den = LaurentPoly::constant(Rational(1));
    den.add_term(Rational(-1), step);
    RationalFunction value(c.shifted(step * i0 + offset), den);
    return ClassFunction(1, n, {value});
  }

  LaurentPoly total;
  for (std::int64_t i = i0; i <= *i1; ++i) total += c.shifted(step * i + offset);
  return ClassFunction(1, n, {RationalFunction(total)});
}

bool admissible_witness(const ClassFunction& f, const Rational& c) {
  if (c == 0) throw Error(ErrorKind::ZeroDenominatorExponent, "witness exponent must be nonzero");
  const Exponent n = lcm64(f.root_order(), den_of(c));
  const Exponent k = to_int64(Rational(abs(c) * n));
  LaurentPoly cleared = LaurentPoly::monomial(Rational(1), k);
  cleared.add_term(Rational(-1), 0);
  for (const auto& cls : f.expanded(f.modulus(), n)) {
    if (!poly::divides(cls.den(), cleared)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Exact k-th root of a non-negative integer, if any.
std::optional<BigInt> exact_root(const BigInt& value, unsigned long k) {
  BigInt root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), k) == 0) return std::nullopt;
  return root;
}

Rational rational_pow(const Rational& base, Exponent e) {
  BigInt num, den;
  const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), mag);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), mag);
  return e < 0 ? ratio(den, num) : ratio(num, den);
}

Rational eval_poly_exact(const LaurentPoly& p, const Rational& y, Exponent g, Exponent s) {
  Rational total(0);
  for (const auto& [e, c] : p.terms()) total += c * rational_pow(y, (g == 0 ? 0 : e / g) * s);
  return total;
}

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

void eval_poly_mpfr(mpfr_ptr out, mpfr_ptr abs_sum, const LaurentPoly& p, mpfr_ptr x, mpfr_prec_t prec) {
  Mpfr term(prec), coeff(prec);
  mpfr_set_zero(out, 1);
  mpfr_set_zero(abs_sum, 1);
  for (const auto& [e, c] : p.terms()) {
    mpfr_pow_si(term.get(), x, e, MPFR_RNDN);
    mpfr_set_q(coeff.get(), c.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), coeff.get(), MPFR_RNDN);
    mpfr_add(out, out, term.get(), MPFR_RNDN);
    mpfr_abs(term.get(), term.get(), MPFR_RNDN);
    mpfr_add(abs_sum, abs_sum, term.get(), MPFR_RNDN);
  }
}

std::string format_decimal(mpfr_ptr value, int digits) {
  if (mpfr_zero_p(value)) return "0";
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), value, MPFR_RNDN);
  std::string s(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!s.empty() && s[0] == '-') {
    sign = "-";
    s.erase(0, 1);
  }
  std::ostringstream os;
  os << sign << s[0];
  if (s.size() > 1) os << "." << s.substr(1);
  os << "e" << (exp - 1 >= 0 ? "+" : "") << (exp - 1);
  return os.str();
}

}  // namespace

std::string EvalResult::error_bound() const {
  if (exact) return "0";
  return "1e-" + std::to_string(digits - 1);
}

std::string EvalResult::to_string() const { return exact ? gml::to_string(*exact) : decimal; }

EvalResult evaluate(const ClassFunction& f, const Rational& q0, Exponent r0, int precision) {
  if (q0 <= 1) throw Error(ErrorKind::InvalidParams, "evaluation requires q0 > 1");
  if (r0 < 1) throw Error(ErrorKind::InvalidParams, "evaluation requires r0 >= 1");
  if (precision < 1) throw Error(ErrorKind::InvalidParams, "precision must be positive");

  const RationalFunction& cls = f.at_residue(r0);
  const Exponent n = f.root_order();
  const Exponent g = cls.exponent_gcd();

  // x^e = q0^(e r0 / n) = y^((e/g) s) with y = q0^(1/t).
  const Exponent gr = g == 0 ? 0 : g * r0;
  const Exponent common = gr == 0 ? n : std::gcd(n, gr);
  const Exponent t = n / common;
  const Exponent s = gr / common;
  auto num_root = exact_root(q0.get_num(), static_cast<unsigned long>(t));
  auto den_root = exact_root(q0.get_den(), static_cast<unsigned long>(t));
  if (num_root && den_root) {
    Rational y(*num_root, *den_root);
    y.canonicalize();
    const Rational den = eval_poly_exact(cls.den(), y, g, s);
    if (den == 0) throw Error(ErrorKind::PoleAtEvaluationPoint, "denominator vanishes at the evaluation point");
    EvalResult out;
    out.exact = eval_poly_exact(cls.num(), y, g, s) / den;
    out.decimal = gml::to_string(*out.exact);
    return out;
  }

  const auto prec = static_cast<mpfr_prec_t>(std::ceil(precision * 3.3219280948873626) + 64);
  Mpfr x(prec), num(prec), den(prec), num_abs(prec), den_abs(prec), tmp(prec);
  mpfr_set_q(x.get(), q0.get_mpq_t(), MPFR_RNDN);
  mpfr_rootn_ui(x.get(), x.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_pow_si(x.get(), x.get(), r0, MPFR_RNDN);
  eval_poly_mpfr(num.get(), num_abs.get(), cls.num(), x.get(), prec);
  eval_poly_mpfr(den.get(), den_abs.get(), cls.den(), x.get(), prec);
  // |den| below the cancellation noise level means the point is a pole.
  mpfr_abs(tmp.get(), den.get(), MPFR_RNDN);
  mpfr_mul_2si(den_abs.get(), den_abs.get(), -(prec - 32), MPFR_RNDN);
  if (mpfr_cmp(tmp.get(), den_abs.get()) <= 0) {
    throw Error(ErrorKind::PoleAtEvaluationPoint, "denominator vanishes at the evaluation point");
  }
  mpfr_div(num.get(), num.get(), den.get(), MPFR_RNDN);
  EvalResult out;
  out.digits = precision;
  out.decimal = format_decimal(num.get(), precision);
  return out;
}

}  // namespace gml
