#include "szkit/critical.hpp"

#include <algorithm>
#include <cmath>

#include "szkit/roots.hpp"

namespace szkit {

RationalMap::RationalMap(IntPoly num, IntPoly den) : p_(std::move(num)), q_(std::move(den)) {
  if (q_.is_zero()) throw std::invalid_argument("RationalMap: zero denominator");
  if (p_.constant_term() != 0) throw std::invalid_argument("RationalMap: P(0) must be 0");
  if (p_.at(1) != 1) throw std::invalid_argument("RationalMap: P'(0) must equal 1");
  if (q_.constant_term() == 0) throw std::invalid_argument("RationalMap: Q(0) must be nonzero");
  if (IntPoly::gcd(p_, q_).degree() > 0)
    throw std::invalid_argument("RationalMap: P and Q must be coprime");
}

namespace {

BigComplex eval_poly(const IntPoly& p, const BigComplex& z) {
  const mpfr_prec_t prec = z.prec();
  BigComplex acc(prec);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * z;
    acc.re = acc.re + BigFloat(*it, prec);
  }
  return acc;
}

}  // namespace

std::vector<CriticalValue> critical_values(const RationalMap& r, const RunConfig& cfg) {
  IntPoly numer = r.num().derivative() * r.den() - r.num() * r.den().derivative();
  if (numer.is_zero())
    throw std::invalid_argument("critical_values: derivative numerator degenerates");
  // Remove pole locations (roots of Q) entirely; they are not critical points.
  while (true) {
    IntPoly g = IntPoly::gcd(numer, r.den());
    if (g.degree() < 1) break;
    numer = numer.divide_exact(g);
  }
  std::vector<CriticalValue> out;
  if (numer.degree() < 1) return out;  // Moebius-like: no critical points

  auto enclosures = detail::isolate_roots_hp(numer, cfg.tol * 1e-2, cfg.precision_cap_bits);
  for (const auto& e : enclosures) {
    const mpfr_prec_t prec = std::max<mpfr_prec_t>(e.center.prec(), 256);
    BigComplex w(prec);
    w.re = w.re + e.center.re;
    w.im = w.im + e.center.im;
    BigComplex pv = eval_poly(r.num(), w);
    BigComplex qv = eval_poly(r.den(), w);
    BigComplex val = pv / qv;

    // First-order propagation |R'(w)| * radius, padded for the higher terms
    // and the arithmetic rounding.
    BigComplex dnum = eval_poly(r.num().derivative(), w) * qv -
                      pv * eval_poly(r.den().derivative(), w);
    BigFloat deriv = (dnum / (qv * qv)).abs();
    double rad = (deriv * e.radius).to_double() * 4.0 + std::abs(val.abs().to_double()) * 1e-60;

    CriticalValue cv;
    cv.value = {val.re.to_double(), val.im.to_double()};
    cv.point = {w.re.to_double(), w.im.to_double()};
    cv.radius = rad + std::abs(cv.value) * 1e-15;
    out.push_back(cv);
  }
  std::sort(out.begin(), out.end(), [](const CriticalValue& a, const CriticalValue& b) {
    return std::abs(a.value) < std::abs(b.value);
  });
  return out;
}

SmaleReport check_smale_bound(const RationalMap& r, const RunConfig& cfg) {
  if (r.degree() <= 1)
    throw std::invalid_argument("check_smale_bound: map degree must exceed 1");
  SmaleReport rep;
  rep.values = critical_values(r, cfg);
  const double expo = static_cast<double>(r.num().degree() + r.den().degree() - 1);
  rep.bound = std::exp(-std::log(4.0) / expo);
  if (rep.values.empty()) {
    rep.vacuous = true;
    rep.holds = true;
    return rep;
  }
  rep.min_modulus = std::abs(rep.values.front().value);
  rep.min_modulus_radius = rep.values.front().radius;
  rep.slack = rep.bound - rep.min_modulus;
  rep.holds = rep.min_modulus <= rep.bound + cfg.tol + rep.min_modulus_radius;
  return rep;
}

TruncatedSeries diagonal_series(const RationalMap& r, std::size_t order) {
  // F(X,Y) = 1/(X Q(Y) - u(Y)) with u = P(Y)/Y, u(0) = 1: the X^k coefficient
  // is -Q(Y)^k u(Y)^(-(k+1)), so a_{k,k} = [Y^k] of that row.
  const IntPoly& p = r.num();
  if (p.degree() < 1 || p.at(1) != 1)
    throw std::invalid_argument("diagonal_series: P(Y)/Y must have unit constant term");
  std::vector<Int> ushift(p.coeffs().begin() + 1, p.coeffs().end());
  IntPoly u(std::move(ushift));

  TruncatedSeries inv_u = TruncatedSeries::from_poly(u, order).inverse();
  TruncatedSeries qs = TruncatedSeries::from_poly(r.den(), order);
  TruncatedSeries qk({Rat(1)}, order);   // Q^k
  TruncatedSeries vk = inv_u;            // u^(-(k+1))
  std::vector<Rat> diag(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    // [Y^k] of qk * vk.
    Rat c(0);
    for (std::size_t i = 0; i <= k; ++i) c += qk.at(i) * vk.at(k - i);
    diag[k] = -c;
    if (k < order) {
      qk = qk * qs;
      vk = vk * inv_u;
    }
  }
  TruncatedSeries out(std::move(diag), order);
  if (!out.is_integral())
    throw InternalFault("diagonal_series: non-integer coefficient");
  return out;
}

}  // namespace szkit
