#include "szkit/sz_check.hpp"

#include <algorithm>
#include <cmath>

#include "szkit/poly_ops.hpp"
#include "szkit/unit_circle.hpp"

namespace szkit {

std::string to_string(SzClassification c) {
  switch (c) {
    case SzClassification::kCyclotomicProduct: return "cyclotomic-product";
    case SzClassification::kBoundSatisfied: return "bound-satisfied";
    case SzClassification::kFault: return "fault";
  }
  return "fault";
}

Interval two_pow_inv_interval(double q) {
  BigFloat e(1.0 / q, 192);
  BigFloat lo(192), hi(192);
  mpfr_exp2(lo.raw(), e.raw(), MPFR_RNDD);
  mpfr_exp2(hi.raw(), e.raw(), MPFR_RNDU);
  // 1/q itself was rounded; widen by one ulp scale.
  return {mpfr_get_d(lo.raw(), MPFR_RNDD) * (1 - 1e-15), mpfr_get_d(hi.raw(), MPFR_RNDU) * (1 + 1e-15)};
}

SzTrace check_sz_bound(const IntPoly& p, const RunConfig& cfg) {
  if (!p.is_monic()) throw std::invalid_argument("check_sz_bound: input must be monic");
  if (p.degree() < 1) throw std::invalid_argument("check_sz_bound: degree must be >= 1");
  if (p.constant_term() == 0) throw std::invalid_argument("check_sz_bound: P(0) must be nonzero");

  SzTrace tr;
  tr.input = p;
  tr.p2 = root_power_transform(p, 2);
  tr.p4 = root_power_transform(tr.p2, 2);

  const std::size_t order = std::max<std::size_t>(cfg.order, 2 * cfg.hankel_k + 1);
  TruncatedSeries f = sz_series(p, order);  // throws InternalFault if non-integral
  tr.series_integral = true;
  tr.hankel = hankel_determinants(f, cfg.hankel_k);

  auto enclosures = isolate_roots(p, cfg.tol, cfg.precision_cap_bits);
  tr.hedgehog_vertices.clear();
  for (const auto& e : enclosures) {
    for (int m = 0; m < e.multiplicity; ++m) {
      auto a2 = e.center * e.center;
      tr.hedgehog_vertices.push_back(a2);
      tr.hedgehog_vertices.push_back(a2 * a2);
    }
  }
  Hedgehog hh(tr.hedgehog_vertices);
  tr.dubinin = dubinin_bound(hh);
  tr.capacity_lt_one = tr.dubinin < 1.0;

  const double n = static_cast<double>(p.degree());
  Interval thr = two_pow_inv_interval(4.0 * n);
  tr.threshold = thr.hi;

  if (is_cyclotomic_product(p)) {
    tr.classification = SzClassification::kCyclotomicProduct;
    tr.house_interval = house(p, cfg.tol, cfg.precision_cap_bits);
    return tr;
  }

  double tol = cfg.tol;
  for (int attempt = 0; attempt < 2; ++attempt) {
    tr.house_interval = house(p, tol, cfg.precision_cap_bits);
    if (tr.house_interval.lo >= thr.hi) {
      tr.classification = SzClassification::kBoundSatisfied;
      return tr;
    }
    if (tr.house_interval.hi < thr.lo) {
      tr.classification = SzClassification::kFault;  // dichotomy violated
      return tr;
    }
    tol *= 1e-4;  // straddle: one precision retry before reporting undecided
  }
  throw Undecided("check_sz_bound: house interval straddles 2^(1/(4n)); tighten --tol");
}

AtoralReport check_atoral_bound(const IntPoly& p, const RunConfig& cfg) {
  if (!p.is_monic()) throw std::invalid_argument("check_atoral_bound: input must be monic");
  const long n = p.degree();
  if (n <= 1) throw std::invalid_argument("check_atoral_bound: degree must exceed 1");
  IntPoly rec = reciprocal(p);
  if (p != rec && p != -rec)
    throw std::invalid_argument("check_atoral_bound: polynomial is not reciprocal");
  if (n % 2 != 0) throw std::invalid_argument("check_atoral_bound: degree must be even");

  AtoralReport rep;
  rep.input = p;
  rep.circle_roots = unit_circle_roots(p);
  if (rep.circle_roots != 0)
    throw std::invalid_argument("check_atoral_bound: polynomial has roots on the unit circle");

  auto enclosures = isolate_roots(p, cfg.tol, cfg.precision_cap_bits);
  std::vector<std::complex<double>> vertices;
  for (const auto& e : enclosures) {
    for (int m = 0; m < e.multiplicity; ++m) {
      auto a2 = e.center * e.center;
      vertices.push_back(a2);
      vertices.push_back(a2 * a2);
    }
  }
  // Radial pairs (alpha, 1/conj(alpha)) share rays, so distinct spike
  // directions number at most n.
  std::vector<double> angles;
  for (const auto& v : vertices) angles.push_back(std::arg(v));
  std::sort(angles.begin(), angles.end());
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (i == 0 || angles[i] - angles[i - 1] > 1e-9) ++distinct;
  }
  // Wrap-around ray.
  if (distinct > 1 && angles.back() - angles.front() > 2 * M_PI - 1e-9) --distinct;
  rep.distinct_spikes = distinct;
  double maxmod = 0.0;
  for (const auto& v : vertices) maxmod = std::max(maxmod, std::abs(v));
  rep.dubinin = maxmod * std::pow(4.0, -1.0 / static_cast<double>(distinct));

  Interval thr = two_pow_inv_interval(2.0 * static_cast<double>(n));
  rep.threshold = thr.hi;
  double tol = cfg.tol;
  for (int attempt = 0; attempt < 2; ++attempt) {
    rep.house_interval = house(p, tol, cfg.precision_cap_bits);
    if (rep.house_interval.lo >= thr.hi) {
      rep.bound_holds = true;
      return rep;
    }
    if (rep.house_interval.hi < thr.lo) {
      rep.bound_holds = false;  // genuine violation: let the caller fail
      return rep;
    }
    tol *= 1e-4;
  }
  throw Undecided("check_atoral_bound: house interval straddles 2^(1/(2n)); tighten --tol");
}

}  // namespace szkit
