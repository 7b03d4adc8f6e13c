#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "szkit/series.hpp"

namespace szkit {

enum class RationalityVerdict { kRationalWindow, kNonRational, kInconclusive };
std::string to_string(RationalityVerdict v);

// Exact shifted Hankel determinants D_k = det(a_{i+j+1})_{i,j=0..k} together
// with the normalized decay sequence |D_k|^(1/k^2).
struct HankelReport {
  std::vector<Rat> dets;     // D_0..D_K, exact
  std::vector<double> decay; // |D_k|^(1/k^2) for k >= 1 (index 0 unused, 0.0)
  RationalityVerdict verdict = RationalityVerdict::kInconclusive;
};

// Fraction-free Bareiss determinant of a square integer matrix.
Int bareiss_determinant(std::vector<std::vector<Int>> m);

// Determinants computed by Bareiss elimination over the integers after
// clearing denominators. Verdict: all of the top third of 0..K zero ->
// rational-window; all of it nonzero -> non-rational; mixed -> inconclusive.
// Requires coefficients a_1..a_{2K+1}.
HankelReport hankel_determinants(const TruncatedSeries& f, std::size_t k_max);

// Pade reconstruction via extended Euclid on (X^(2d+1), truncation): coprime
// integer (numerator, denominator) with q(0) != 0, both degrees <= dmax,
// matching every available coefficient of f. Requires >= 2 dmax + 2
// coefficients.
std::optional<std::pair<IntPoly, IntPoly>> reconstruct_rational(const TruncatedSeries& f,
                                                                std::size_t dmax);

// Diagnostic comparison of the Hankel decay sequence against a capacity
// bound; never a proof.
struct DecayReport {
  std::vector<double> decay;
  double final_value = 0.0;
  double capacity = 0.0;
  double slack = 1.5;
  bool within_bound = false;
};
DecayReport decay_against_capacity(const TruncatedSeries& f, double capacity,
                                   std::size_t k_max, double slack = 1.5);

}  // namespace szkit
