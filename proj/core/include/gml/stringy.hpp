#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gml/mass.hpp"

namespace gml {

/// Subset of the horizontal divisors {1..n}: bit j-1 stands for divisor j.
using DivisorSet = std::uint64_t;
inline constexpr std::size_t kMaxDivisors = 64;

std::vector<std::uint32_t> divisor_indices(DivisorSet s);  // 1-based, ascending
DivisorSet divisor_set(const std::vector<std::uint32_t>& indices);

/// Counts of the strata C_J (closed) or C_J minus the smaller strata (open).
using StrataMap = std::map<DivisorSet, ClassFunction>;

enum class StrataMode { Open, Closed };

/// A vertical exceptional divisor with discrepancy a and the counts of its
/// smooth locus met with each C_J.
struct VerticalDivisor {
  Rational a;
  StrataMap strata;
  friend bool operator==(const VerticalDivisor&, const VerticalDivisor&) = default;
};

/// Strata data of a weak log resolution over a subvariety C. The
/// non-smooth vertical divisors carry no term in the formula and are not stored.
struct ResolutionData {
  std::int64_t dim = 1;
  StrataMode mode = StrataMode::Open;
  std::vector<Rational> horizontal;  // discrepancy c_j of divisor j+1
  std::vector<VerticalDivisor> vertical;
  StrataMap strata;
  friend bool operator==(const ResolutionData&, const ResolutionData&) = default;
};

using StringyCount = Extended;

/// Throws MalformedStrata (unknown divisor, zero discrepancy, too many
/// divisors) or InvalidParams (dim < 1).
void validate(const ResolutionData& data);

/// Inclusion-exclusion between open and closed strata; toggles the mode.
/// Zero entries are dropped, so converting twice returns the input.
ResolutionData open_closed_convert(const ResolutionData& data);

/// sum_h Q^(-a_h) sum_J #(stratum) prod_(j in J) (Q - 1)/(Q^(1 + c_j) - 1),
/// with the top-level strata forming an a = 0 row. Divergent when a nonzero
/// stratum meets a divisor with c_j <= -1. Requires open strata (Precondition).
StringyCount stringy_count(const ResolutionData& data);

/// f == dual(f) Q^d.
bool poincare_check(const ClassFunction& f, std::int64_t d);

/// (total - origin) / (Q - 1). Throws InfiniteInput.
ClassFunction gm_quotient(const StringyCount& total, const StringyCount& origin);

/// F == dual(F) Q^(d-1) for F = gm_quotient(total, origin).
bool gm_duality_check(const StringyCount& total, const StringyCount& origin, std::int64_t d);

/// total == mass_v Q^d and origin == mass_w. Throws InfiniteInput.
bool mckay_identity_check(const MassPair& masses, const StringyCount& total, const StringyCount& origin,
                          std::int64_t d);

}  // namespace gml
