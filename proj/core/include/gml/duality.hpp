#pragma once

#include <cstdint>

#include "gml/mass.hpp"

namespace gml {

/// strong: dual(mass_w) == mass_v.
/// weak:   mass_v Q^d - mass_w == dual(mass_w) Q^d - dual(mass_v).
/// Residuals are left side minus right side.
struct DualityReport {
  bool strong = false;
  bool weak = false;
  std::int64_t dim = 0;
  ClassFunction strong_residual;
  ClassFunction weak_residual;
  friend bool operator==(const DualityReport&, const DualityReport&) = default;
};

/// Throws InfiniteMass for a divergent component and InvalidParams for d < 1.
DualityReport duality_report(const MassPair& masses, std::int64_t d);

}  // namespace gml
