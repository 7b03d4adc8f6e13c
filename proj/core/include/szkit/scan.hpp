#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "szkit/config.hpp"
#include "szkit/int_poly.hpp"

namespace szkit {

// Exhaustive dichotomy verification over monic degree-n polynomials with
// |coefficients| <= B and P(0) = +-1. Enumeration canonicalizes the orbit
// {P(X), P(-X), reciprocal variants} (all share root moduli up to inversion),
// verifying the bound for every orbit member from a single root isolation.
struct ScanReport {
  unsigned long degree = 0;
  long coeff_bound = 0;
  std::uint64_t family_size = 0;
  std::uint64_t start_index = 0;
  std::uint64_t end_index = 0;  // exclusive
  bool complete = true;
  std::string resume_token;  // meaningful when complete is false

  std::uint64_t orbits_processed = 0;
  std::uint64_t members_checked = 0;
  std::uint64_t cyclotomic_members = 0;
  std::uint64_t bound_members = 0;
  std::uint64_t fault_count = 0;
  std::vector<IntPoly> counterexamples;

  bool has_min_house = false;
  double min_house = 0.0;  // minimal house among non-cyclotomic members
  IntPoly min_house_witness;

  double threshold = 0.0;    // 2^(1/(4n))
  double smyth_floor = 0.0;  // 1.3247...^(1/n), non-reciprocal reference line

  bool clean() const { return counterexamples.empty() && fault_count == 0; }
};

ScanReport scan(unsigned long degree, long coeff_bound, const RunConfig& cfg = {},
                const std::string& resume_token = "");

}  // namespace szkit
