#pragma once

#include <cstddef>
#include <cstdint>

namespace szkit {

// Shared knobs for the theorem-checking pipelines and the CLI.
struct RunConfig {
  double tol = 1e-12;
  std::size_t order = 128;          // default series truncation order
  long precision_cap_bits = 4096;   // root-finder escalation cap
  double slack = 1.5;               // decay-vs-capacity diagnostic dial
  double height_slack = 0.05;       // relative slack on height lower bounds
  std::size_t hankel_k = 15;        // default Hankel determinant range
  unsigned jobs = 1;                // scan parallelism
  std::uint64_t scan_budget = 10'000'000;  // n*(2B+1)^n work cap per run
};

}  // namespace szkit
