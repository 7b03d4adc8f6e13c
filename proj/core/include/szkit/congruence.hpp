#pragma once

#include <optional>

#include "szkit/int_poly.hpp"

namespace szkit {

// Witness that Q = U^2 + 4V exactly, with U(0) = 1 and V(0) = 0.
struct SquareCertificate {
  IntPoly u;
  IntPoly v;
};

// P_4 == P_2 mod 4, coefficientwise. Holds for every monic integer P;
// false signals a fault upstream.
bool verify_mod4(const IntPoly& p);

// P_{p^2} == P_p mod p^2, coefficientwise.
bool verify_prime_congruence(const IntPoly& p, unsigned long prime_p);

// The exact difference P_{p^2} - P_p together with its divisor witness
// (difference / p^2). Backs the `congruence` CLI subcommand.
struct CongruenceWitness {
  IntPoly difference;
  IntPoly witness;  // difference = p^2 * witness when holds
  bool holds = false;
};
CongruenceWitness prime_congruence_witness(const IntPoly& p, unsigned long prime_p);

// Square-root extraction in (Z/4)[X]: a certificate exists iff Q mod 4 is the
// square of a polynomial with unit constant term. The lift U is chosen with
// coefficients in {-1, 0, 1} and U(0) = 1.
std::optional<SquareCertificate> certify_square_mod4(const IntPoly& q);

// ( |c_0|_l / max_i |c_i|_l )^( p^(e+1) ) with the normalized l-adic absolute
// value |l|_l = 1/l; c_0 is the constant term, which must be nonzero.
Rat v_adic_radius(const IntPoly& p, unsigned long ell, int e, unsigned long prime_p);

}  // namespace szkit
