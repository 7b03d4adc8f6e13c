#include "szkit/rationality.hpp"

#include <algorithm>
#include <cmath>

namespace szkit {

std::string to_string(RationalityVerdict v) {
  switch (v) {
    case RationalityVerdict::kRationalWindow: return "rational-window";
    case RationalityVerdict::kNonRational: return "non-rational";
    case RationalityVerdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Int bareiss_determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("bareiss_determinant: matrix not square");
  }
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

HankelReport hankel_determinants(const TruncatedSeries& f, std::size_t k_max) {
  if (f.order() < 2 * k_max + 1)
    throw std::invalid_argument("hankel_determinants: need coefficients a_1..a_{2K+1}");
  // Clear denominators once: entries b_m = a_m * L are integers and
  // D_k = det(b) / L^(k+1).
  Int lcm_den = 1;
  for (std::size_t m = 1; m <= 2 * k_max + 1; ++m) {
    Int den = f.at(m).get_den();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Int> b(2 * k_max + 2);
  for (std::size_t m = 1; m <= 2 * k_max + 1; ++m) {
    const Rat& a = f.at(m);
    b[m] = a.get_num() * (lcm_den / a.get_den());
  }
  HankelReport rep;
  rep.dets.resize(k_max + 1);
  rep.decay.assign(k_max + 1, 0.0);
  for (std::size_t k = 0; k <= k_max; ++k) {
    std::vector<std::vector<Int>> mat(k + 1, std::vector<Int>(k + 1));
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j <= k; ++j) mat[i][j] = b[i + j + 1];
    Int det = bareiss_determinant(std::move(mat));
    rep.dets[k] = make_rat(det, int_pow(lcm_den, static_cast<unsigned long>(k + 1)));
    if (k >= 1 && rep.dets[k] != 0) {
      double logd = log_abs(rep.dets[k].get_num()) - log_abs(rep.dets[k].get_den());
      rep.decay[k] = std::exp(logd / static_cast<double>(k * k));
    }
  }
  // Window policy: the top third of 0..K decides.
  const std::size_t w = (k_max + 1 + 2) / 3;  // ceil((K+1)/3)
  bool all_zero = true, all_nonzero = true;
  for (std::size_t k = k_max + 1 - w; k <= k_max; ++k) {
    if (rep.dets[k] == 0) all_nonzero = false;
    else all_zero = false;
  }
  rep.verdict = all_zero      ? RationalityVerdict::kRationalWindow
                : all_nonzero ? RationalityVerdict::kNonRational
                              : RationalityVerdict::kInconclusive;
  return rep;
}

namespace {

struct RatPoly {
  std::vector<Rat> c;  // ascending
  long degree() const {
    long d = static_cast<long>(c.size()) - 1;
    while (d >= 0 && c[static_cast<std::size_t>(d)] == 0) --d;
    return d;
  }
};

// r0 = q*r1 + rem over Q[X].
void divmod(const RatPoly& r0, const RatPoly& r1, RatPoly* quot, RatPoly* rem) {
  RatPoly r = r0;
  long d1 = r1.degree();
  quot->c.assign(std::max<long>(r0.degree() - d1 + 1, 1), Rat(0));
  const Rat lead = r1.c[static_cast<std::size_t>(d1)];
  long dr = r.degree();
  while (dr >= d1) {
    Rat f = r.c[static_cast<std::size_t>(dr)] / lead;
    quot->c[static_cast<std::size_t>(dr - d1)] = f;
    for (long j = 0; j <= d1; ++j)
      r.c[static_cast<std::size_t>(dr - d1 + j)] -= f * r1.c[static_cast<std::size_t>(j)];
    r.c[static_cast<std::size_t>(dr)] = 0;
    dr = r.degree();
  }
  *rem = std::move(r);
}

RatPoly sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
  // a - q*b
  RatPoly out = a;
  long dq = q.degree(), db = b.degree();
  if (dq >= 0 && db >= 0) {
    std::size_t need = static_cast<std::size_t>(dq + db) + 1;
    if (out.c.size() < need) out.c.resize(need, Rat(0));
    for (long i = 0; i <= dq; ++i) {
      if (q.c[static_cast<std::size_t>(i)] == 0) continue;
      for (long j = 0; j <= db; ++j)
        out.c[static_cast<std::size_t>(i + j)] -=
            q.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

// Clears denominators and common content; sign so that q(0) > 0 when
// possible, else leading coefficient positive.
std::pair<IntPoly, IntPoly> normalize_pair(const RatPoly& p, const RatPoly& q) {
  Int l = 1;
  for (const auto& v : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  for (const auto& v : q.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  auto lift = [&](const RatPoly& r) {
    std::vector<Int> out(r.c.size());
    for (std::size_t i = 0; i < r.c.size(); ++i) {
      Rat scaled = r.c[i] * Rat(l);
      out[i] = scaled.get_num();
    }
    return IntPoly(std::move(out));
  };
  IntPoly pi = lift(p), qi = lift(q);
  Int g;
  mpz_gcd(g.get_mpz_t(), pi.content().get_mpz_t(), qi.content().get_mpz_t());
  if (g > 1) {
    pi = pi.divide_exact(IntPoly::constant(g));
    qi = qi.divide_exact(IntPoly::constant(g));
  }
  IntPoly common = IntPoly::gcd(pi, qi);
  if (common.degree() > 0) {
    pi = pi.divide_exact(common);
    qi = qi.divide_exact(common);
  }
  bool flip = qi.constant_term() != 0 ? qi.constant_term() < 0 : qi.lead() < 0;
  if (flip) {
    pi = -pi;
    qi = -qi;
  }
  return {pi, qi};
}

}  // namespace

std::optional<std::pair<IntPoly, IntPoly>> reconstruct_rational(const TruncatedSeries& f,
                                                                std::size_t dmax) {
  if (f.coeffs().size() < 2 * dmax + 2)
    throw std::invalid_argument("reconstruct_rational: need >= 2*dmax + 2 coefficients");
  const long two_d = static_cast<long>(2 * dmax);
  // Extended Euclid on r0 = X^(2d+1), r1 = truncation, tracking only the
  // cofactor of r1: r_i = u_i r0 + v_i r1.
  RatPoly r0, r1, v0, v1;
  r0.c.assign(static_cast<std::size_t>(two_d) + 2, Rat(0));
  r0.c.back() = 1;
  r1.c.assign(static_cast<std::size_t>(two_d) + 1, Rat(0));
  for (long i = 0; i <= two_d; ++i) r1.c[static_cast<std::size_t>(i)] = f.at(static_cast<std::size_t>(i));
  v0.c = {Rat(0)};
  v1.c = {Rat(1)};
  while (r1.degree() > static_cast<long>(dmax)) {
    RatPoly q, rem;
    divmod(r0, r1, &q, &rem);
    RatPoly vnext = sub_mul(v0, q, v1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    v0 = std::move(v1);
    v1 = std::move(vnext);
    if (r1.degree() < 0) break;  // exact division: f is a ratio of lower degree
  }
  if (v1.degree() > static_cast<long>(dmax)) return std::nullopt;
  if (v1.degree() < 0) return std::nullopt;
  // A common factor h with h(0) = 0 may hide q(0) != 0; normalize_pair
  // removes gcds before the constant-term test.
  auto [pi, qi] = normalize_pair(r1, v1);
  if (pi.degree() > static_cast<long>(dmax) || qi.degree() > static_cast<long>(dmax))
    return std::nullopt;
  if (qi.constant_term() == 0) return std::nullopt;
  // Residual check against every available coefficient.
  TruncatedSeries check = TruncatedSeries::from_rational(pi, qi, f.order());
  for (std::size_t i = 0; i <= f.order(); ++i) {
    if (check.at(i) != f.at(i)) return std::nullopt;
  }
  return std::make_pair(pi, qi);
}

DecayReport decay_against_capacity(const TruncatedSeries& f, double capacity,
                                   std::size_t k_max, double slack) {
  HankelReport h = hankel_determinants(f, k_max);
  DecayReport rep;
  rep.decay = h.decay;
  rep.capacity = capacity;
  rep.slack = slack;
  rep.final_value = k_max >= 1 ? h.decay[k_max] : 0.0;
  rep.within_bound = rep.final_value <= capacity * slack;
  return rep;
}

}  // namespace szkit
