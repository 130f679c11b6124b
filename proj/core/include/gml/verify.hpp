#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gml/stringy.hpp"

namespace gml {

namespace fixtures {

/// Cone over a conic: crepant minimal resolution with exceptional curve P^1.
/// Total and origin data, both in open mode with no discrepant divisors.
ResolutionData a1_cone_total();
ResolutionData a1_cone_origin();

/// Quotient of the plane by diag(zeta_3, zeta_3): one exceptional curve with
/// discrepancy -1/3.
ResolutionData z3_cone_total();
ResolutionData z3_cone_origin();

/// One divisor with discrepancy -1 on a nonempty stratum.
ResolutionData log_canonical_cone();

}  // namespace fixtures

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool passed() const;
};

enum class Suite { All, Tame, Partitions, Stringy, Wild, Qsym };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite s);

/// Runs the bundled fixtures; All expands to every suite in a fixed order.
std::vector<SuiteResult> run_suite(Suite s);

/// Plain-text table, one line per check and a summary line per suite.
std::string format_results(const std::vector<SuiteResult>& results);

}  // namespace gml
