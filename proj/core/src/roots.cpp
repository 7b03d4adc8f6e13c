#include "szkit/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "szkit/big_float.hpp"

namespace szkit {

namespace {

struct PrecEnclosure {
  BigComplex center;
  BigFloat radius;
  int multiplicity = 1;
  bool cluster = false;

  PrecEnclosure(BigComplex c, BigFloat r, int mult, bool cl)
      : center(std::move(c)), radius(std::move(r)), multiplicity(mult), cluster(cl) {}
};

// Horner evaluation with a running bound on the accumulated rounding error:
// |computed - exact| <= err. The bound is the standard (2 deg + 2) eps sum of
// |c_k||z|^k majorant.
BigComplex eval_with_error(const std::vector<BigFloat>& coeffs, const BigComplex& z,
                           BigFloat* err) {
  const mpfr_prec_t prec = z.prec();
  BigComplex acc(prec);
  BigFloat zabs = z.abs();
  BigFloat majorant(0.0, prec);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * z;
    acc.re = acc.re + *it;
    majorant = majorant * zabs + it->abs();
  }
  BigFloat eps(0.0, prec);
  mpfr_set_ui_2exp(eps.raw(), 4 * coeffs.size() + 4, -prec, MPFR_RNDU);
  *err = majorant * eps;
  return acc;
}

// Bini-style initial guesses from the upper convex hull of (i, log|c_i|).
std::vector<BigComplex> initial_points(const IntPoly& f, mpfr_prec_t prec) {
  const long n = f.degree();
  std::vector<std::pair<long, double>> pts;
  for (long i = 0; i <= n; ++i) {
    if (f.at(static_cast<std::size_t>(i)) != 0)
      pts.emplace_back(i, log_abs(f.at(static_cast<std::size_t>(i))));
  }
  // Upper hull by index.
  std::vector<std::pair<long, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // Keep b only if it lies strictly above segment (a, p).
      double t = static_cast<double>(b.first - a.first) / static_cast<double>(p.first - a.first);
      if (b.second <= a.second + t * (p.second - a.second)) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  std::vector<BigComplex> z;
  z.reserve(static_cast<std::size_t>(n));
  const double golden = 0.3930530024;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    long i1 = hull[h].first, i2 = hull[h + 1].first;
    double r = std::exp((hull[h].second - hull[h + 1].second) / static_cast<double>(i2 - i1));
    if (!std::isfinite(r) || r <= 0) r = 1.0;
    for (long j = 0; j < i2 - i1; ++j) {
      double ang = 2.0 * M_PI * (static_cast<double>(j) + 0.5) / static_cast<double>(i2 - i1) +
                   golden + static_cast<double>(h);
      z.emplace_back(r * std::cos(ang), r * std::sin(ang), prec);
    }
  }
  while (z.size() < static_cast<std::size_t>(n)) z.emplace_back(1.0, 1.0, prec);
  z.resize(static_cast<std::size_t>(n), BigComplex(prec));
  return z;
}

// Aberth-Ehrlich on a squarefree factor; returns true with filled radii on
// success at this precision.
bool aberth_pass(const IntPoly& f, mpfr_prec_t prec, std::vector<BigComplex>& z,
                 std::vector<BigFloat>& radii) {
  const long n = f.degree();
  std::vector<BigFloat> cf, cdf;
  cf.reserve(static_cast<std::size_t>(n) + 1);
  for (const auto& c : f.coeffs()) cf.emplace_back(Int(c), prec);
  IntPoly df = f.derivative();
  for (const auto& c : df.coeffs()) cdf.emplace_back(Int(c), prec);

  // Raise the working precision of warm-start points.
  for (auto& zi : z) {
    BigComplex up(prec);
    up.re = up.re + zi.re;
    up.im = up.im + zi.im;
    zi = up;
  }

  BigFloat conv_eps(0.0, prec);
  mpfr_set_ui_2exp(conv_eps.raw(), 1, -(prec - 16), MPFR_RNDN);

  const int max_sweeps = 60 + 10 * static_cast<int>(n);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool moved = false;
    for (long i = 0; i < n; ++i) {
      auto& zi = z[static_cast<std::size_t>(i)];
      BigFloat eval_err(prec);
      BigComplex fz = eval_with_error(cf, zi, &eval_err);
      if (fz.abs() <= eval_err) continue;  // at residual floor already
      BigFloat dummy(prec);
      BigComplex dfz = eval_with_error(cdf, zi, &dummy);
      if (dfz.norm2().is_zero()) continue;
      BigComplex newton = fz / dfz;
      BigComplex s(prec);
      bool collision = false;
      for (long j = 0; j < n; ++j) {
        if (j == i) continue;
        BigComplex diff = zi - z[static_cast<std::size_t>(j)];
        if (diff.norm2().is_zero()) { collision = true; break; }
        BigComplex one(1.0, 0.0, prec);
        s = s + one / diff;
      }
      if (collision) {
        // Nudge coincident points apart.
        BigFloat tiny(1e-3, prec);
        zi.re = zi.re + tiny;
        moved = true;
        continue;
      }
      BigComplex one(1.0, 0.0, prec);
      BigComplex denom = one - newton * s;
      if (denom.norm2().is_zero()) continue;
      BigComplex w = newton / denom;
      zi = zi - w;
      BigFloat rel = w.abs();
      BigFloat scale = zi.abs();
      if (scale.is_zero()) scale = BigFloat(1.0, prec);
      if (conv_eps < rel / scale) moved = true;
    }
    if (!moved) break;
  }

  // A posteriori radii: n * (|F(z)| + err) / (|F'(z)| - err').
  radii.clear();
  radii.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    BigFloat ef(prec), edf(prec);
    BigComplex fz = eval_with_error(cf, z[static_cast<std::size_t>(i)], &ef);
    BigComplex dfz = eval_with_error(cdf, z[static_cast<std::size_t>(i)], &edf);
    BigFloat num = (fz.abs() + ef) * BigFloat(static_cast<double>(n), prec);
    BigFloat den = dfz.abs() - edf;
    if (!(den > BigFloat(0.0, prec))) return false;
    radii.push_back(num / den);
  }
  return true;
}

std::vector<PrecEnclosure> solve_squarefree(const IntPoly& f, int multiplicity, double tol,
                                            long precision_cap) {
  std::vector<PrecEnclosure> out;
  const long n = f.degree();
  if (n == 1) {
    Rat root = make_rat(-f.at(0), f.at(1));
    BigComplex c(BigFloat(root, 256), BigFloat(0.0, 64));
    BigFloat rad(0.0, 64);
    if (mpfr_cmp_q(c.re.raw(), root.get_mpq_t()) != 0) {
      mpfr_set_d(rad.raw(), std::abs(root.get_d()) * 1e-70 + 1e-300, MPFR_RNDU);
    }
    out.emplace_back(std::move(c), std::move(rad), multiplicity, false);
    return out;
  }

  long coeff_bits = 0;
  for (const auto& c : f.coeffs())
    coeff_bits = std::max<long>(coeff_bits, static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)));
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max<long>(128, coeff_bits + 64));

  std::vector<BigComplex> z = initial_points(f, prec);
  BigFloat tol_bf(tol, 128);

  while (true) {
    std::vector<BigFloat> radii;
    bool ok = aberth_pass(f, prec, z, radii);
    if (ok) {
      bool small = true;
      for (const auto& r : radii) {
        if (!(r <= tol_bf)) { small = false; break; }
      }
      bool disjoint = true;
      if (small) {
        for (long i = 0; i < n && disjoint; ++i)
          for (long j = i + 1; j < n; ++j) {
            BigFloat dist = (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]).abs();
            if (dist <= radii[static_cast<std::size_t>(i)] + radii[static_cast<std::size_t>(j)]) {
              disjoint = false;
              break;
            }
          }
      }
      if (small && disjoint) {
        for (long i = 0; i < n; ++i)
          out.emplace_back(z[static_cast<std::size_t>(i)], radii[static_cast<std::size_t>(i)],
                           multiplicity, false);
        return out;
      }
      if (small && static_cast<long>(prec) * 2 > precision_cap) {
        // Merge overlapping disks into clusters; keeps modulus bounds valid.
        std::vector<int> group(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i) group[static_cast<std::size_t>(i)] = static_cast<int>(i);
        for (long i = 0; i < n; ++i)
          for (long j = i + 1; j < n; ++j) {
            BigFloat dist = (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]).abs();
            if (!(dist > radii[static_cast<std::size_t>(i)] + radii[static_cast<std::size_t>(j)])) {
              int gi = group[static_cast<std::size_t>(i)], gj = group[static_cast<std::size_t>(j)];
              for (auto& g : group)
                if (g == gj) g = gi;
            }
          }
        for (long g = 0; g < n; ++g) {
          std::vector<long> members;
          for (long i = 0; i < n; ++i)
            if (group[static_cast<std::size_t>(i)] == g) members.push_back(i);
          if (members.empty()) continue;
          if (members.size() == 1) {
            long i = members[0];
            out.emplace_back(z[static_cast<std::size_t>(i)], radii[static_cast<std::size_t>(i)],
                             multiplicity, false);
            continue;
          }
          BigComplex centroid(prec);
          for (long i : members) centroid = centroid + z[static_cast<std::size_t>(i)];
          BigFloat inv(1.0 / static_cast<double>(members.size()), prec);
          centroid.re = centroid.re * inv;
          centroid.im = centroid.im * inv;
          BigFloat rad(0.0, prec);
          for (long i : members) {
            BigFloat reach =
                (z[static_cast<std::size_t>(i)] - centroid).abs() + radii[static_cast<std::size_t>(i)];
            if (rad < reach) rad = reach;
          }
          out.emplace_back(centroid, rad, multiplicity * static_cast<int>(members.size()), true);
        }
        return out;
      }
    }
    if (static_cast<long>(prec) * 2 > precision_cap) {
      throw Undecided("isolate_roots: no certified enclosures at precision cap " +
                      std::to_string(precision_cap) + " bits");
    }
    prec *= 2;
  }
}

}  // namespace

namespace detail {

std::vector<HpEnclosure> isolate_roots_hp(const IntPoly& p, double tol, long precision_cap_bits) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  if (p.degree() == 0) throw std::invalid_argument("isolate_roots: degree 0 input has no roots");
  if (!(tol > 0)) throw std::invalid_argument("isolate_roots: tol must be positive");
  std::vector<HpEnclosure> all;
  auto factors = p.squarefree_decomposition();
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].degree() < 1) continue;
    auto part = solve_squarefree(factors[k], static_cast<int>(k + 1), tol, precision_cap_bits);
    for (auto& e : part)
      all.push_back(HpEnclosure{std::move(e.center), std::move(e.radius), e.multiplicity, e.cluster});
  }
  return all;
}

}  // namespace detail

namespace {

std::vector<detail::HpEnclosure> isolate_roots_prec(const IntPoly& p, double tol,
                                                    long precision_cap) {
  return detail::isolate_roots_hp(p, tol, precision_cap);
}

}  // namespace

std::vector<RootEnclosure> isolate_roots(const IntPoly& p, double tol, long precision_cap_bits) {
  auto prec_enc = isolate_roots_prec(p, tol, precision_cap_bits);
  std::vector<RootEnclosure> out;
  out.reserve(prec_enc.size());
  for (const auto& e : prec_enc) {
    RootEnclosure r;
    double re = e.center.re.to_double();
    double im = e.center.im.to_double();
    r.center = {re, im};
    // Inflate by the double-conversion slop.
    double conv = (std::fabs(re) + std::fabs(im)) * 1e-15 + 1e-300;
    r.radius = e.radius.to_double() * (1 + 1e-12) + conv;
    r.multiplicity = e.multiplicity;
    r.cluster = e.cluster;
    out.push_back(r);
  }
  return out;
}

namespace {

Interval modulus_extreme(const IntPoly& p, double tol, long cap, bool want_max) {
  if (p.degree() < 1) throw std::invalid_argument("house: polynomial must be nonconstant");
  auto enc = isolate_roots_prec(p, tol, cap);
  double lo = want_max ? 0.0 : std::numeric_limits<double>::infinity();
  double hi = lo;
  bool first = true;
  for (const auto& e : enc) {
    BigFloat a = e.center.abs();
    double alo = std::max((a - e.radius).to_double() * (1 - 1e-14), 0.0);
    double ahi = (a + e.radius).to_double() * (1 + 1e-14);
    if (first) {
      lo = alo;
      hi = ahi;
      first = false;
    } else if (want_max) {
      lo = std::max(lo, alo);
      hi = std::max(hi, ahi);
    } else {
      lo = std::min(lo, alo);
      hi = std::min(hi, ahi);
    }
  }
  return {lo, hi};
}

}  // namespace

Interval house(const IntPoly& p, double tol, long precision_cap_bits) {
  return modulus_extreme(p, tol, precision_cap_bits, true);
}

Interval min_root_modulus(const IntPoly& p, double tol, long precision_cap_bits) {
  return modulus_extreme(p, tol, precision_cap_bits, false);
}

Interval mahler_measure(const IntPoly& p, double tol, long precision_cap_bits) {
  if (p.is_zero()) throw std::invalid_argument("mahler_measure: zero polynomial");
  BigFloat lead(Int(abs(p.lead())), 192);
  double lo = lead.log_lower();
  double hi = lead.log_upper();
  if (p.degree() >= 1) {
    auto enc = isolate_roots_prec(p, tol, precision_cap_bits);
    const BigFloat one(1.0, 192);
    for (const auto& e : enc) {
      BigFloat a = e.center.abs();
      BigFloat alo = a - e.radius;
      BigFloat ahi = a + e.radius;
      double term_lo = (alo > one) ? alo.log_lower() : 0.0;
      double term_hi = (ahi > one) ? ahi.log_upper() : 0.0;
      lo += e.multiplicity * term_lo;
      hi += e.multiplicity * term_hi;
    }
  }
  return {lo, hi};
}

}  // namespace szkit
