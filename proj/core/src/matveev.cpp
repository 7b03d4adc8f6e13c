#include "szkit/matveev.hpp"

#include <stdexcept>

#include "szkit/big_float.hpp"

namespace szkit {

namespace {

// log 2/(4n) and 3 log(n/2)/n^2 as directed-rounded brackets at 192 bits.
struct Bracket {
  double lo, hi;
};

Bracket sz_side(unsigned long n, mpfr_prec_t prec = 192) {
  BigFloat two(2.0, prec), l(prec);
  Bracket b{};
  mpfr_log(l.raw(), two.raw(), MPFR_RNDD);
  b.lo = mpfr_get_d(l.raw(), MPFR_RNDD) / (4.0 * static_cast<double>(n)) * (1 - 1e-15);
  mpfr_log(l.raw(), two.raw(), MPFR_RNDU);
  b.hi = mpfr_get_d(l.raw(), MPFR_RNDU) / (4.0 * static_cast<double>(n)) * (1 + 1e-15);
  return b;
}

Bracket matveev_side(unsigned long n, mpfr_prec_t prec = 192) {
  BigFloat half_n(static_cast<double>(n) / 2.0, prec), l(prec);
  Bracket b{};
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  mpfr_log(l.raw(), half_n.raw(), MPFR_RNDD);
  b.lo = 3.0 * mpfr_get_d(l.raw(), MPFR_RNDD) / n2 * (1 - 1e-15);
  mpfr_log(l.raw(), half_n.raw(), MPFR_RNDU);
  b.hi = 3.0 * mpfr_get_d(l.raw(), MPFR_RNDU) / n2 * (1 + 1e-15);
  return b;
}

}  // namespace

double matveev_bound(unsigned long n) {
  if (n < 12)
    throw std::invalid_argument("matveev_bound: valid only for degree n >= 12");
  Bracket b = matveev_side(n);
  return 0.5 * (b.lo + b.hi);
}

std::vector<MatveevRow> matveev_comparison_table(unsigned long lo, unsigned long hi) {
  if (lo < 12 || hi < lo) throw std::invalid_argument("matveev table: bad degree range");
  std::vector<MatveevRow> rows;
  for (unsigned long n = lo; n <= hi; ++n) {
    MatveevRow r;
    r.n = n;
    Bracket s = sz_side(n), m = matveev_side(n);
    r.sz_bound = 0.5 * (s.lo + s.hi);
    r.matveev = 0.5 * (m.lo + m.hi);
    if (s.lo > m.hi) r.sz_stronger = true;
    else if (s.hi < m.lo) r.sz_stronger = false;
    else throw std::logic_error("matveev table: brackets overlap; raise precision");
    rows.push_back(r);
  }
  return rows;
}

unsigned long matveev_crossover_degree() {
  // The comparison is monotone in n well past this horizon; find the first n
  // with sz stronger and confirm it stays stronger through the window.
  unsigned long first = 0;
  for (unsigned long n = 12; n <= 4096; ++n) {
    Bracket s = sz_side(n), m = matveev_side(n);
    bool stronger = s.lo > m.hi;
    if (stronger && first == 0) first = n;
    if (!stronger && first != 0)
      throw std::logic_error("matveev crossover: comparison not monotone past first crossing");
  }
  if (first == 0) throw std::logic_error("matveev crossover: not found below horizon");
  return first;
}

}  // namespace szkit
