#include "szkit/hedgehog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace szkit {

Hedgehog::Hedgehog(std::vector<std::complex<double>> v) : vertices(std::move(v)) {
  if (vertices.empty()) throw std::invalid_argument("Hedgehog: needs at least one vertex");
  for (const auto& a : vertices) {
    if (a == std::complex<double>(0.0, 0.0))
      throw std::invalid_argument("Hedgehog: vertices must be nonzero");
  }
}

double Hedgehog::max_vertex_modulus() const {
  double m = 0.0;
  for (const auto& a : vertices) m = std::max(m, std::abs(a));
  return m;
}

Hedgehog regular_hedgehog(std::size_t spikes, double length) {
  if (spikes == 0) throw std::invalid_argument("regular_hedgehog: needs spikes >= 1");
  if (!(length > 0)) throw std::invalid_argument("regular_hedgehog: length must be positive");
  std::vector<std::complex<double>> v;
  v.reserve(spikes);
  for (std::size_t h = 0; h < spikes; ++h) {
    double ang = 2.0 * std::numbers::pi * static_cast<double>(h) / static_cast<double>(spikes);
    v.emplace_back(length * std::cos(ang), length * std::sin(ang));
  }
  return Hedgehog(std::move(v));
}

double dubinin_bound(const Hedgehog& k) {
  const double m = static_cast<double>(k.spike_count());
  return k.max_vertex_modulus() * std::pow(4.0, -1.0 / m);
}

double leja_capacity_estimate(const Hedgehog& k, std::size_t npts, std::size_t grid_per_spike) {
  if (npts < 8) throw std::invalid_argument("leja_capacity_estimate: npts must be >= 8");
  if (grid_per_spike < 2) throw std::invalid_argument("leja_capacity_estimate: grid too coarse");
  // Discretize each spike with points clustered at both ends, plus the
  // origin once.
  std::vector<std::complex<double>> grid;
  grid.reserve(k.vertices.size() * grid_per_spike + 1);
  for (const auto& a : k.vertices) {
    for (std::size_t j = 1; j <= grid_per_spike; ++j) {
      double t = 0.5 * (1.0 - std::cos(std::numbers::pi * static_cast<double>(j) /
                                       static_cast<double>(grid_per_spike)));
      grid.push_back(a * t);
    }
  }
  grid.emplace_back(0.0, 0.0);
  npts = std::min(npts, grid.size());

  std::vector<std::complex<double>> chosen;
  chosen.reserve(npts);
  std::size_t start = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (std::abs(grid[i]) > std::abs(grid[start])) start = i;
  }
  chosen.push_back(grid[start]);
  std::vector<double> logprod(grid.size(), 0.0);
  for (std::size_t step = 1; step < npts; ++step) {
    const auto& last = chosen.back();
    std::size_t best = 0;
    double best_val = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      double d = std::abs(grid[i] - last);
      logprod[i] += (d > 0) ? std::log(d) : -1e300;
      if (logprod[i] > best_val) {
        best_val = logprod[i];
        best = i;
      }
    }
    chosen.push_back(grid[best]);
  }

  double s = 0.0;
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (std::size_t j = i + 1; j < chosen.size(); ++j)
      s += std::log(std::abs(chosen[i] - chosen[j]));
  const double n = static_cast<double>(chosen.size());
  return std::exp(2.0 * s / (n * (n - 1.0)));
}

double slit_disk_radius(double b, double s, unsigned long k) {
  if (!(b > 0) || !(b <= s)) throw std::invalid_argument("slit_disk_radius: need 0 < b <= S");
  if (k < 1) throw std::invalid_argument("slit_disk_radius: need k >= 1");
  // log R = (log 4 + k log b + 2k log S - 2 log(b^k + S^k)) / k, with
  // log(b^k + S^k) = k log S + log1p((b/S)^k) to dodge overflow.
  const double kk = static_cast<double>(k);
  double log_ratio_pow = kk * std::log(b / s);
  double log_sum = kk * std::log(s) + std::log1p(std::exp(log_ratio_pow));
  double log_r = (std::log(4.0) + kk * std::log(b) + 2.0 * kk * std::log(s) - 2.0 * log_sum) / kk;
  return std::exp(log_r);
}

}  // namespace szkit
