#include "gml/stringy.hpp"

#include <bit>

#include "gml/errors.hpp"

namespace gml {

std::vector<std::uint32_t> divisor_indices(DivisorSet s) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t j = 0; s != 0; ++j, s >>= 1) {
    if (s & 1) out.push_back(j + 1);
  }
  return out;
}

DivisorSet divisor_set(const std::vector<std::uint32_t>& indices) {
  DivisorSet s = 0;
  for (auto j : indices) {
    if (j < 1 || j > kMaxDivisors) throw Error(ErrorKind::MalformedStrata, "divisor index out of range: " + std::to_string(j));
    const DivisorSet bit = DivisorSet{1} << (j - 1);
    if (s & bit) throw Error(ErrorKind::MalformedStrata, "repeated divisor index " + std::to_string(j));
    s |= bit;
  }
  return s;
}

namespace {

void validate_keys(const StrataMap& strata, std::size_t n) {
  const DivisorSet allowed = n >= kMaxDivisors ? ~DivisorSet{0} : (DivisorSet{1} << n) - 1;
  for (const auto& [key, value] : strata) {
    if ((key & ~allowed) != 0) {
      const auto idx = divisor_indices(key & ~allowed);
      throw Error(ErrorKind::MalformedStrata, "stratum references unknown divisor " + std::to_string(idx.front()));
    }
  }
}

StrataMap convert(const StrataMap& strata, bool to_open) {
  StrataMap out;
  for (const auto& [key, value] : strata) {
    // Every subset J of key, including key itself and the empty set.
    DivisorSet sub = key;
    while (true) {
      const bool negative = to_open && (std::popcount(key) - std::popcount(sub)) % 2 != 0;
      auto [it, inserted] = out.try_emplace(sub);
      it->second = negative ? it->second - value : it->second + value;
      if (sub == 0) break;
      sub = (sub - 1) & key;
    }
  }
  std::erase_if(out, [](const auto& entry) { return entry.second.is_zero(); });
  return out;
}

}  // namespace

void validate(const ResolutionData& data) {
  if (data.dim < 1) throw Error(ErrorKind::InvalidParams, "dim must be >= 1");
  const std::size_t n = data.horizontal.size();
  if (n > kMaxDivisors) throw Error(ErrorKind::MalformedStrata, "at most 64 horizontal divisors are supported");
  for (std::size_t j = 0; j < n; ++j) {
    if (data.horizontal[j] == 0) {
      throw Error(ErrorKind::MalformedStrata, "divisor " + std::to_string(j + 1) + " has zero discrepancy");
    }
  }
  validate_keys(data.strata, n);
  for (const auto& v : data.vertical) validate_keys(v.strata, n);
}

ResolutionData open_closed_convert(const ResolutionData& data) {
  validate(data);
  const bool to_open = data.mode == StrataMode::Closed;
  ResolutionData out = data;
  out.mode = to_open ? StrataMode::Open : StrataMode::Closed;
  out.strata = convert(data.strata, to_open);
  for (auto& v : out.vertical) v.strata = convert(v.strata, to_open);
  return out;
}

StringyCount stringy_count(const ResolutionData& data) {
  validate(data);
  if (data.mode != StrataMode::Open) {
    throw Error(ErrorKind::Precondition, "stringy_count needs open strata; convert closed data first");
  }
  const ClassFunction q_minus_one = ClassFunction::q_power(Rational(1)) - ClassFunction::constant(Rational(1));
  std::vector<std::optional<ClassFunction>> factor(data.horizontal.size());
  auto factor_of = [&](std::size_t j) -> const ClassFunction& {
    if (!factor[j]) {
      const ClassFunction den = ClassFunction::q_power(1 + data.horizontal[j]) - ClassFunction::constant(Rational(1));
      factor[j] = divide(q_minus_one, den);
    }
    return *factor[j];
  };

  ClassFunction total;
  auto add_row = [&](const Rational& a, const StrataMap& strata) -> std::optional<Divergent> {
    ClassFunction row;
    for (const auto& [key, count] : strata) {
      if (count.is_zero()) continue;
      ClassFunction term = count;
      for (auto j : divisor_indices(key)) {
        const Rational& c = data.horizontal[j - 1];
        if (c <= -1) {
          return Divergent{"divisor " + std::to_string(j) + " has discrepancy " + to_string(c) +
                           " <= -1 on a nonempty stratum"};
        }
        term = term * factor_of(j - 1);
      }
      row = row + term;
    }
    total = total + row.scale_pow(-a);
    return std::nullopt;
  };

  if (auto d = add_row(Rational(0), data.strata)) return *d;
  for (const auto& v : data.vertical) {
    if (auto d = add_row(v.a, v.strata)) return *d;
  }
  return total;
}

bool poincare_check(const ClassFunction& f, std::int64_t d) { return f == dual(f).scale_pow(Rational(d)); }

ClassFunction gm_quotient(const StringyCount& total, const StringyCount& origin) {
  const ClassFunction& t = finite_value(total, ErrorKind::InfiniteInput);
  const ClassFunction& o = finite_value(origin, ErrorKind::InfiniteInput);
  return divide(t - o, ClassFunction::q_power(Rational(1)) - ClassFunction::constant(Rational(1)));
}

bool gm_duality_check(const StringyCount& total, const StringyCount& origin, std::int64_t d) {
  if (d < 1) throw Error(ErrorKind::InvalidParams, "d must be >= 1");
  const ClassFunction f = gm_quotient(total, origin);
  return f == dual(f).scale_pow(Rational(d - 1));
}

bool mckay_identity_check(const MassPair& masses, const StringyCount& total, const StringyCount& origin,
                          std::int64_t d) {
  const ClassFunction& mv = finite_value(masses.mass_v, ErrorKind::InfiniteInput);
  const ClassFunction& mw = finite_value(masses.mass_w, ErrorKind::InfiniteInput);
  const ClassFunction& t = finite_value(total, ErrorKind::InfiniteInput);
  const ClassFunction& o = finite_value(origin, ErrorKind::InfiniteInput);
  return t == mv.scale_pow(Rational(d)) && o == mw;
}

}  // namespace gml
