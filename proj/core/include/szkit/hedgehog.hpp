#pragma once

#include <complex>
#include <vector>

#include "szkit/common.hpp"

namespace szkit {

// Union of closed radial segments [0, a_i] with nonzero vertices a_i.
// Coincident vertices (overlapping spikes) are allowed.
struct Hedgehog {
  std::vector<std::complex<double>> vertices;

  explicit Hedgehog(std::vector<std::complex<double>> v);
  std::size_t spike_count() const { return vertices.size(); }
  double max_vertex_modulus() const;
};

// Regular m-spike hedgehog of common length, vertices on the m-th roots of
// unity scaled by `length`.
Hedgehog regular_hedgehog(std::size_t spikes, double length);

// (max_i |a_i|^m / 4)^(1/m) with m = number of vertices. Equality holds
// exactly for the vertices of a regular m-gon centered at the origin.
double dubinin_bound(const Hedgehog& k);

// Greedy Leja points on a per-spike discretization; returns the n-point
// geometric-mean pairwise distance (prod_{i<j} |z_i - z_j|)^(2/(n(n-1))).
// Approaches the transfinite diameter from above as npts grows, with
// relative excess on the order of log(npts)/npts.
double leja_capacity_estimate(const Hedgehog& k, std::size_t npts,
                              std::size_t grid_per_spike = 800);

// Conformal mapping radius of the disk of radius S slit along k symmetric
// radial segments [b, S]: (4 b^k S^(2k) / (b^k + S^k)^2)^(1/k).
// Requires 0 < b <= S and k >= 1.
double slit_disk_radius(double b, double s, unsigned long k);

}  // namespace szkit
