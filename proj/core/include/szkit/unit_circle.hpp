#pragma once

#include "szkit/int_poly.hpp"

namespace szkit {

// Exact number of roots of P on |z| = 1, counted with multiplicity.
// Symbolic: G = gcd(P, P*) carries every unit-circle root; after stripping
// z = 1 and z = -1 the palindromic remainder maps through t = z + 1/z to a
// real polynomial whose roots in (-2, 2) are counted by Sturm sequences in
// exact arithmetic. Requires P(0) != 0.
long unit_circle_roots(const IntPoly& p);

// Number of distinct real roots of p in the open interval (a, b); p(a) and
// p(b) must be nonzero. Exposed for direct testing.
long sturm_count(const IntPoly& p, const Rat& a, const Rat& b);

}  // namespace szkit
