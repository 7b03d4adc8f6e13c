#pragma once

#include <complex>
#include <vector>

#include "szkit/config.hpp"
#include "szkit/int_poly.hpp"
#include "szkit/series.hpp"

namespace szkit {

// R(z) = P(z)/Q(z) with integer coefficients, P(0) = 0, P'(0) = 1 and
// gcd(P, Q) = 1. The constructor validates the invariants.
class RationalMap {
 public:
  RationalMap(IntPoly num, IntPoly den);
  const IntPoly& num() const { return p_; }
  const IntPoly& den() const { return q_; }
  long degree() const { return std::max(p_.degree(), q_.degree()); }

 private:
  IntPoly p_, q_;
};

// One critical value R(w), R'(w) = 0, with a propagated error bound; exact
// when the critical point is rational.
struct CriticalValue {
  std::complex<double> value;
  double radius = 0.0;
  std::complex<double> point;
};

// All finite critical values (poles excluded). Throws when the derivative
// numerator degenerates to zero.
std::vector<CriticalValue> critical_values(const RationalMap& r, const RunConfig& cfg = {});

// min |R(w)| <= exp(-log 4 / (deg P + deg Q - 1)) check; vacuous (reported,
// not asserted) when the critical set is empty.
struct SmaleReport {
  std::vector<CriticalValue> values;
  double min_modulus = 0.0;
  double min_modulus_radius = 0.0;
  double bound = 0.0;
  double slack = 0.0;  // bound - min
  bool vacuous = false;
  bool holds = false;
};
SmaleReport check_smale_bound(const RationalMap& r, const RunConfig& cfg = {});

// Diagonal a_{i,i} of 1/(X Q(Y) - P(Y)/Y); all coefficients integers.
TruncatedSeries diagonal_series(const RationalMap& r, std::size_t order);

}  // namespace szkit
