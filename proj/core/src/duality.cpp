#include "gml/duality.hpp"

#include "gml/errors.hpp"

namespace gml {

DualityReport duality_report(const MassPair& masses, std::int64_t d) {
  if (d < 1) throw Error(ErrorKind::InvalidParams, "d must be >= 1");
  const ClassFunction& mv = finite_value(masses.mass_v, ErrorKind::InfiniteMass);
  const ClassFunction& mw = finite_value(masses.mass_w, ErrorKind::InfiniteMass);
  const Rational dim(d);
  const ClassFunction dual_mv = dual(mv);
  const ClassFunction dual_mw = dual(mw);

  DualityReport report;
  report.dim = d;
  report.strong_residual = dual_mw - mv;
  report.weak_residual = (mv.scale_pow(dim) - mw) - (dual_mw.scale_pow(dim) - dual_mv);
  report.strong = report.strong_residual.is_zero();
  report.weak = report.weak_residual.is_zero();
  return report;
}

}  // namespace gml
