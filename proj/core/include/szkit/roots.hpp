#pragma once

#include <complex>
#include <vector>

#include "szkit/big_float.hpp"
#include "szkit/int_poly.hpp"

namespace szkit {

// One certified root disk: |z - center| <= radius contains exactly
// `multiplicity` roots of the source polynomial (more than one only when
// the cluster flag is set).
struct RootEnclosure {
  std::complex<double> center;
  double radius = 0.0;
  int multiplicity = 1;
  bool cluster = false;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

// Certified enclosures of all complex roots. Squarefree decomposition is
// taken internally; each factor is solved by Aberth-Ehrlich simultaneous
// iteration with a posteriori radii deg(F)*|F(z)/F'(z)| and doubling
// precision until every radius is <= tol and the disks are pairwise disjoint
// (or merged into flagged clusters at the precision cap).
std::vector<RootEnclosure> isolate_roots(const IntPoly& p, double tol,
                                         long precision_cap_bits = 4096);

// Interval certified to contain max |root|; width <= 2 tol.
Interval house(const IntPoly& p, double tol, long precision_cap_bits = 4096);

// Interval certified to contain min |root|.
Interval min_root_modulus(const IntPoly& p, double tol, long precision_cap_bits = 4096);

// log|lead| + sum of log+|root| over all roots with multiplicity, with
// directed rounding at the interval endpoints.
Interval mahler_measure(const IntPoly& p, double tol, long precision_cap_bits = 4096);

namespace detail {

// Enclosures before the lossy conversion to double; consumed by pipelines
// that need tighter error propagation (critical values, house thresholds).
struct HpEnclosure {
  BigComplex center;
  BigFloat radius;
  int multiplicity = 1;
  bool cluster = false;
};

std::vector<HpEnclosure> isolate_roots_hp(const IntPoly& p, double tol,
                                          long precision_cap_bits = 4096);

}  // namespace detail

}  // namespace szkit
