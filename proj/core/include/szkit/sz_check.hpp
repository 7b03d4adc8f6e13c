#pragma once

#include <string>

#include "szkit/config.hpp"
#include "szkit/hedgehog.hpp"
#include "szkit/rationality.hpp"
#include "szkit/roots.hpp"
#include "szkit/series.hpp"

namespace szkit {

enum class SzClassification { kCyclotomicProduct, kBoundSatisfied, kFault };
std::string to_string(SzClassification c);

// 2^(1/q) as a certified double bracket.
Interval two_pow_inv_interval(double q);

// Full verification trace for one polynomial: the root-power transforms, the
// integrality of the associated series, the hedgehog of squared and
// fourth-powered roots with its capacity bound, and the Hankel rationality
// evidence.
struct SzTrace {
  IntPoly input;
  IntPoly p2, p4;
  bool series_integral = false;
  std::vector<std::complex<double>> hedgehog_vertices;
  double dubinin = 0.0;
  bool capacity_lt_one = false;
  HankelReport hankel;
  Interval house_interval;
  double threshold = 0.0;  // 2^(1/(4n))
  SzClassification classification = SzClassification::kFault;
};

// Root-modulus dichotomy check: either P is a product of cyclotomic
// polynomials, or its house certifiably exceeds 2^(1/(4 deg P)).
// Throws Undecided when the certified house interval straddles the threshold
// even after an internal precision retry.
SzTrace check_sz_bound(const IntPoly& p, const RunConfig& cfg = {});

// Strengthened bound for monic reciprocal polynomials with no unit-circle
// roots: house >= 2^(1/(2 deg P)). Precondition failures are reported
// individually.
struct AtoralReport {
  IntPoly input;
  Interval house_interval;
  double threshold = 0.0;  // 2^(1/(2n))
  long circle_roots = 0;
  std::size_t distinct_spikes = 0;  // <= n for genuine inputs
  double dubinin = 0.0;
  bool bound_holds = false;
};
AtoralReport check_atoral_bound(const IntPoly& p, const RunConfig& cfg = {});

}  // namespace szkit
