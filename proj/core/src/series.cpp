#include "szkit/series.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "szkit/poly_ops.hpp"

namespace szkit {

namespace {
const Rat kZeroRat = 0;
}

TruncatedSeries::TruncatedSeries(std::vector<Rat> coeffs, std::size_t order) {
  coeffs.resize(order + 1, Rat(0));
  coeffs_ = std::move(coeffs);
  for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::from_poly(const IntPoly& p, std::size_t order) {
  std::vector<Rat> c(order + 1, Rat(0));
  for (std::size_t i = 0; i <= order && i < p.coeffs().size(); ++i) c[i] = Rat(p.coeffs()[i]);
  TruncatedSeries s;
  s.coeffs_ = std::move(c);
  return s;
}

TruncatedSeries TruncatedSeries::from_rational(const IntPoly& p, const IntPoly& q,
                                               std::size_t order) {
  if (q.constant_term() == 0)
    throw std::invalid_argument("from_rational: q(0) must be nonzero");
  return from_poly(p, order) * from_poly(q, order).inverse();
}

const Rat& TruncatedSeries::at(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZeroRat;
}

bool TruncatedSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rat& c) { return is_integer(c); });
}

TruncatedSeries TruncatedSeries::truncate(std::size_t order) const {
  TruncatedSeries s;
  s.coeffs_.assign(coeffs_.begin(),
                   coeffs_.begin() + std::min(coeffs_.size(), order + 1));
  s.coeffs_.resize(order + 1, Rat(0));
  return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  std::size_t n = std::min(order(), o.order());
  TruncatedSeries s;
  s.coeffs_.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) s.coeffs_[i] = at(i) + o.at(i);
  return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  std::size_t n = std::min(order(), o.order());
  TruncatedSeries s;
  s.coeffs_.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) s.coeffs_[i] = at(i) - o.at(i);
  return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  std::size_t n = std::min(order(), o.order());
  TruncatedSeries s;
  s.coeffs_.assign(n + 1, Rat(0));
  for (std::size_t i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n && j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] != 0) s.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return s;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_.empty() || coeffs_[0] == 0)
    throw std::invalid_argument("series inverse: constant term must be nonzero");
  const std::size_t n = order();
  TruncatedSeries v;
  v.coeffs_ = {Rat(1) / coeffs_[0]};
  std::size_t correct = 1;
  while (correct <= n) {
    correct = std::min(2 * correct, n + 1);
    TruncatedSeries u = truncate(correct - 1);
    v.coeffs_.resize(correct, Rat(0));
    // v <- v(2 - u v)
    TruncatedSeries uv = u * v;
    TruncatedSeries two_minus;
    two_minus.coeffs_.assign(correct, Rat(0));
    two_minus.coeffs_[0] = 2;
    v = v * (two_minus - uv);
  }
  return v.truncate(n);
}

namespace {

TruncatedSeries newton_root(const TruncatedSeries& q, unsigned long p) {
  if (q.at(0) != 1)
    throw std::invalid_argument("series root: constant term must equal 1");
  const std::size_t n = q.order();
  TruncatedSeries s;
  s = TruncatedSeries({Rat(1)}, 0);
  std::size_t correct = 1;
  const Rat pr(static_cast<long>(p));
  while (correct <= n) {
    correct = std::min(2 * correct, n + 1);
    TruncatedSeries u = q.truncate(correct - 1);
    s = s.truncate(correct - 1);
    // s <- s - (s^p - u) / (p s^(p-1))
    TruncatedSeries sp1({Rat(1)}, correct - 1);
    for (unsigned long e = 0; e + 1 < p; ++e) sp1 = sp1 * s;
    TruncatedSeries f = sp1 * s - u;
    TruncatedSeries denom = sp1 * TruncatedSeries({pr}, correct - 1);
    s = s - f * denom.inverse();
  }
  return s.truncate(n);
}

}  // namespace

TruncatedSeries sqrt_series(const TruncatedSeries& q) { return newton_root(q, 2); }

TruncatedSeries sqrt_series(const IntPoly& q, std::size_t order) {
  if (q.constant_term() != 1)
    throw std::invalid_argument("sqrt_series: Q(0) must equal 1");
  return newton_root(TruncatedSeries::from_poly(q, order), 2);
}

TruncatedSeries pth_root_series(const TruncatedSeries& q, unsigned long prime_p) {
  if (!is_prime(prime_p)) throw std::invalid_argument("pth_root_series: p must be prime");
  return newton_root(q, prime_p);
}

TruncatedSeries pth_root_series(const IntPoly& q, unsigned long prime_p, std::size_t order) {
  if (q.constant_term() != 1)
    throw std::invalid_argument("pth_root_series: Q(0) must equal 1");
  if (!is_prime(prime_p)) throw std::invalid_argument("pth_root_series: p must be prime");
  return newton_root(TruncatedSeries::from_poly(q, order), prime_p);
}

TruncatedSeries sz_series(const IntPoly& p, std::size_t order) {
  if (!p.is_monic()) throw std::invalid_argument("sz_series: input must be monic");
  IntPoly p2 = root_power_transform(p, 2);
  IntPoly p4 = root_power_transform(p2, 2);
  IntPoly w = reciprocal(p2) * reciprocal(p4);
  TruncatedSeries s = sqrt_series(w, order);
  if (!s.is_integral())
    throw InternalFault("sz_series: non-integer coefficient; integrality violated");
  return s;
}

void OdeOperator::validate() const {
  if (r < 1) throw std::invalid_argument("OdeOperator: order r must be >= 1");
  if (leading.is_zero()) throw std::invalid_argument("OdeOperator: leading polynomial is zero");
  if (lower.size() != static_cast<std::size_t>(r))
    throw std::invalid_argument("OdeOperator: lower list must have r entries");
}

long Recurrence::max_shift() const {
  long m = terms.empty() ? 0 : terms.front().shift;
  for (const auto& t : terms) m = std::max(m, t.shift);
  return m;
}

long Recurrence::min_shift() const {
  long m = terms.empty() ? 0 : terms.front().shift;
  for (const auto& t : terms) m = std::min(m, t.shift);
  return m;
}

TruncatedSeries Recurrence::generate(const std::vector<Rat>& seed, std::size_t order) const {
  if (terms.empty()) throw std::invalid_argument("Recurrence::generate: empty recurrence");
  const long smax = max_shift();
  std::vector<Rat> a(seed);
  const IntPoly* top = nullptr;
  for (const auto& t : terms) {
    if (t.shift == smax) top = &t.poly_in_n;
  }
  for (std::size_t t = seed.size(); t <= order; ++t) {
    long n = static_cast<long>(t) - smax;
    if (n < 0) throw std::invalid_argument("Recurrence::generate: seed shorter than max shift");
    Rat lead = top->eval(Rat(n));
    if (lead == 0)
      throw std::invalid_argument("Recurrence::generate: singular index not covered by seed");
    Rat acc(0);
    for (const auto& term : terms) {
      if (term.shift == smax) continue;
      long idx = n + term.shift;
      if (idx < 0) continue;
      acc += term.poly_in_n.eval(Rat(n)) * a[static_cast<std::size_t>(idx)];
    }
    a.push_back(-acc / lead);
  }
  a.resize(order + 1);
  return TruncatedSeries(std::move(a), order);
}

bool Recurrence::annihilates(const TruncatedSeries& f) const {
  const long smax = max_shift();
  const long top = static_cast<long>(f.order()) - std::max<long>(smax, 0);
  for (long n = 0; n <= top; ++n) {
    Rat acc(0);
    for (const auto& term : terms) {
      long idx = n + term.shift;
      if (idx < 0 || idx > static_cast<long>(f.order())) continue;
      acc += term.poly_in_n.eval(Rat(n)) * f.at(static_cast<std::size_t>(idx));
    }
    if (acc != 0) return false;
  }
  return true;
}

Recurrence recurrence_from_ode(const OdeOperator& op) {
  op.validate();
  // Coefficient m of X^j d^i f is ff(m+i-j, i) a_{m+i-j} with ff the falling
  // factorial; collect polynomial-in-n weights per shift s = i - j.
  std::map<long, IntPoly> by_shift;
  auto add_term = [&](long i, const IntPoly& coeff_poly) {
    for (long j = 0; j <= coeff_poly.degree(); ++j) {
      const Int& c = coeff_poly.at(static_cast<std::size_t>(j));
      if (c == 0) continue;
      long s = i - j;
      // ff(n + s, i) = prod_{t=0}^{i-1} (n + s - t) as a polynomial in n.
      IntPoly ff = IntPoly::constant(1);
      for (long t = 0; t < i; ++t)
        ff = ff * (IntPoly::x() + IntPoly::constant(Int(s - t)));
      by_shift[s] = by_shift[s] + ff * c;
    }
  };
  add_term(op.r, op.leading);
  for (long i = 0; i < op.r; ++i) add_term(i, op.lower[static_cast<std::size_t>(i)]);
  Recurrence rec;
  for (auto& [s, poly] : by_shift) {
    if (!poly.is_zero()) rec.terms.push_back({s, poly});
  }
  if (rec.terms.empty()) throw std::invalid_argument("recurrence_from_ode: operator collapsed to zero");
  return rec;
}

double series_height(const TruncatedSeries& f) {
  if (f.coeffs().size() < 16)
    throw std::invalid_argument("series_height: need at least 16 coefficients");
  const std::size_t n = f.order();
  // Incremental projective height of [a_0 : ... : a_m]: clear denominators
  // via running lcm, track gcd and max of the cleared integer entries.
  Int lcm_den(1), gcd_num(0), max_abs(0);
  double best = 0.0;
  const std::size_t lo = n / 2;
  for (std::size_t m = 0; m <= n; ++m) {
    const Rat& a = f.at(m);
    Int den = a.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    Int scale = den / g;  // lcm grows by this factor
    if (scale != 1) {
      lcm_den *= scale;
      gcd_num *= scale;
      max_abs *= scale;
    }
    Int entry = a.get_num() * (lcm_den / den);
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), entry.get_mpz_t());
    Int e = abs(entry);
    if (e > max_abs) max_abs = e;
    if (m >= lo && m >= 1 && max_abs != 0) {
      double h = log_abs(max_abs) - (gcd_num != 0 ? log_abs(gcd_num) : 0.0);
      best = std::max(best, h / static_cast<double>(m));
    }
  }
  return best;
}

}  // namespace szkit
