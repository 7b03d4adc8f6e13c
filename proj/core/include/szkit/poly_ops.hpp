#pragma once

#include <optional>
#include <vector>

#include "szkit/int_poly.hpp"

namespace szkit {

// Power sums s_1..s_M of the roots of a monic integer polynomial.
struct PowerSums {
  std::vector<Int> values;  // values[m-1] = sum of alpha_i^m
};

// Monic polynomial whose roots are the m-th powers of the roots of P.
// m is factored into primes; each prime step is the resultant
// Res_Y(P(Y), X - Y^q) computed exactly over Z[X].
IntPoly root_power_transform(const IntPoly& p, unsigned long m);

// X^deg(P) * P(1/X): coefficient reversal with trailing-zero trim.
IntPoly reciprocal(const IntPoly& p);

// The N-th cyclotomic polynomial, by exact division of X^N - 1.
IntPoly cyclotomic(unsigned long n);

unsigned long euler_phi(unsigned long n);

// True iff every root of the monic P with P(0) != 0 is a root of unity.
// Exact: strips cyclotomic factors Phi_N for all N with phi(N) <= deg P
// (equivalently N <= 2 deg^2) until nothing remains.
bool is_cyclotomic_product(const IntPoly& p);

// Q with Q^p = P exactly, when such an integer polynomial exists.
// For even p the returned root has positive leading coefficient.
std::optional<IntPoly> is_perfect_pth_power(const IntPoly& p, unsigned long prime_p);

// Exact power sums via the Newton-Girard recurrence; P must be monic.
PowerSums power_sums(const IntPoly& p, unsigned long m_max);

// Newton identities in reverse: the monic polynomial of degree n whose root
// power sums are the given s_1..s_n. Divisions must be exact (throws
// InternalFault otherwise). Used as an independent oracle in tests.
IntPoly poly_from_power_sums(const std::vector<Int>& sums, std::size_t n);

}  // namespace szkit
