#include "szkit/holonomic.hpp"

#include <algorithm>
#include <cmath>

namespace szkit {

namespace {

// Does q divide (X^j - 1)^m for some m <= m_bound? Strips gcds with X^j - 1
// repeatedly; constants pass trivially.
bool divides_cyclic_power(const IntPoly& q, unsigned long j, unsigned long m_bound) {
  IntPoly rest = q.primitive_part();
  IntPoly cyc = IntPoly::monomial(1, j) - IntPoly::constant(1);
  for (unsigned long m = 0; m < m_bound && rest.degree() > 0; ++m) {
    IntPoly g = IntPoly::gcd(rest, cyc);
    if (g.degree() < 1) return false;
    auto quot = rest.divide_if_exact(g);
    if (!quot) return false;
    rest = quot->primitive_part();
  }
  return rest.degree() == 0;
}

}  // namespace

HolonomicReport check_holonomic_bound(const TruncatedSeries& f, const OdeOperator& op,
                                      const RunConfig& cfg) {
  op.validate();
  bool nonzero = false;
  for (const auto& c : f.coeffs()) nonzero = nonzero || c != 0;
  if (!nonzero) throw std::invalid_argument("check_holonomic_bound: series is zero");

  Recurrence rec = recurrence_from_ode(op);
  if (!rec.annihilates(f))
    throw std::invalid_argument(
        "check_holonomic_bound: operator does not annihilate the series");

  HolonomicReport rep;
  rep.k = op.leading.squarefree_part().degree();
  rep.integer_coefficients = f.is_integral();

  if (rep.k == 0) {
    // No finite singularities: the lower bound degenerates; report only.
    rep.height_estimate = series_height(f);
    rep.bound_asserted = false;
    rep.bound_holds = true;
    return rep;
  }

  // Special rational form p(X)/(X^j - 1)^m, searched with j <= k, m <= 8.
  const unsigned long m_bound = 8;
  std::size_t dmax = std::min<std::size_t>(static_cast<std::size_t>(rep.k) * m_bound,
                                           (f.coeffs().size() - 2) / 2);
  auto recon = reconstruct_rational(f, dmax);
  if (recon) {
    for (unsigned long j = 1; j <= static_cast<unsigned long>(rep.k); ++j) {
      if (divides_cyclic_power(recon->second, j, m_bound)) {
        rep.special_rational_form = true;
        rep.rational_form = recon;
        rep.bound_asserted = false;
        rep.bound_holds = true;
        rep.height_estimate = series_height(f);
        return rep;
      }
    }
  }

  rep.height_estimate = series_height(f);
  rep.bound_rational = 1.0 / (150.0 * static_cast<double>(rep.k));
  rep.bound_integer = std::log(4.0) / static_cast<double>(rep.k);
  rep.bound_asserted = true;
  const double relax = 1.0 - cfg.height_slack;
  rep.bound_holds = rep.height_estimate >= rep.bound_rational * relax;
  if (rep.integer_coefficients)
    rep.bound_holds = rep.bound_holds && rep.height_estimate >= rep.bound_integer * relax;
  return rep;
}

}  // namespace szkit
