#pragma once

#include <vector>

#include "szkit/int_poly.hpp"

namespace szkit {

// Order-N truncated formal power series with exact rational coefficients,
// always stored in lowest terms. length = order + 1.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(std::vector<Rat> coeffs, std::size_t order);
  static TruncatedSeries from_poly(const IntPoly& p, std::size_t order);
  // Series of p/q about 0; q(0) != 0.
  static TruncatedSeries from_rational(const IntPoly& p, const IntPoly& q, std::size_t order);

  std::size_t order() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& at(std::size_t i) const;
  bool is_integral() const;

  TruncatedSeries truncate(std::size_t order) const;
  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  // Product truncated to min(order(), o.order()).
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

  // Multiplicative inverse (constant term must be nonzero), Newton iteration.
  TruncatedSeries inverse() const;

 private:
  std::vector<Rat> coeffs_;
};

// Unique s with s(0) = 1, s^2 = Q mod X^(N+1); Q(0) must be 1.
TruncatedSeries sqrt_series(const IntPoly& q, std::size_t order);
TruncatedSeries sqrt_series(const TruncatedSeries& q);

// Unique s with s(0) = 1, s^p = Q mod X^(N+1); Q(0) must be 1.
TruncatedSeries pth_root_series(const IntPoly& q, unsigned long prime_p, std::size_t order);
TruncatedSeries pth_root_series(const TruncatedSeries& q, unsigned long prime_p);

// sqrt(P2*(x) P4*(x)) in the variable x = 1/X for monic P. Every coefficient
// is an integer; a non-integer coefficient raises InternalFault.
TruncatedSeries sz_series(const IntPoly& p, std::size_t order);

// Linear differential operator L = q(X) d^r + sum_i a_i(X) d^i, i < r.
struct OdeOperator {
  long r = 0;
  IntPoly leading;
  std::vector<IntPoly> lower;  // a_0 .. a_{r-1}

  void validate() const;
};

// P-finite recurrence sum_s poly_s(n) * a_{n+s} = 0 (for all n >= 0, indices
// out of range absent). Shifts s range over [min_shift, max_shift].
struct Recurrence {
  struct Term {
    long shift = 0;
    IntPoly poly_in_n;
  };
  std::vector<Term> terms;

  long max_shift() const;
  long min_shift() const;
  // Extends the seed to a_0..a_order. The leading polynomial evaluated at the
  // generation index must be nonzero unless the seed already covers it.
  TruncatedSeries generate(const std::vector<Rat>& seed, std::size_t order) const;
  // Exact annihilation check against a truncation.
  bool annihilates(const TruncatedSeries& f) const;
};

Recurrence recurrence_from_ode(const OdeOperator& op);

// Finite proxy for the exponential growth rate of coefficient heights:
// max over n in [order/2, order] of h([a_0 : ... : a_n]) / n, where the
// projective height clears denominators to a coprime integer vector.
// Requires at least 16 coefficients.
double series_height(const TruncatedSeries& f);

}  // namespace szkit
