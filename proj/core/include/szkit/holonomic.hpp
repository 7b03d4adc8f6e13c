#pragma once

#include <optional>

#include "szkit/config.hpp"
#include "szkit/rationality.hpp"
#include "szkit/series.hpp"

namespace szkit {

// Height lower-bound check for a holonomic series: either f has the special
// rational form p(X)/(X^j - 1)^m (j <= k singularities), or its height
// estimate must clear 1/(150 k), strengthened to log(4)/k for integer
// coefficients. k counts distinct roots of the leading ODE polynomial.
struct HolonomicReport {
  long k = 0;
  bool special_rational_form = false;
  std::optional<std::pair<IntPoly, IntPoly>> rational_form;
  bool integer_coefficients = false;
  double height_estimate = 0.0;
  double bound_rational = 0.0;  // 1/(150 k)
  double bound_integer = 0.0;   // log 4 / k, meaningful when integral
  bool bound_asserted = false;  // false on the special-form route (or k = 0)
  bool bound_holds = false;
};

HolonomicReport check_holonomic_bound(const TruncatedSeries& f, const OdeOperator& op,
                                      const RunConfig& cfg = {});

}  // namespace szkit
