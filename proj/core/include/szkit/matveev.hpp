#pragma once

#include <vector>

namespace szkit {

// Lower bound 3 log(n/2) / n^2 on max log|root|, valid for degrees n >= 12.
double matveev_bound(unsigned long n);

// Per-degree comparison of log 2 / (4n) against the Matveev bound, with the
// inequality decided by directed rounding (certain, not approximate).
struct MatveevRow {
  unsigned long n = 0;
  double sz_bound = 0.0;       // log 2 / (4n)
  double matveev = 0.0;        // 3 log(n/2) / n^2
  bool sz_stronger = false;
};
std::vector<MatveevRow> matveev_comparison_table(unsigned long lo, unsigned long hi);

// Least degree from which log 2/(4n) certifiably exceeds the Matveev bound
// onward (checked through a generous horizon).
unsigned long matveev_crossover_degree();

}  // namespace szkit
