#include "szkit/poly_ops.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace szkit {

namespace {

// Fraction-free Bareiss determinant of a square matrix over Z[X].
// Divisions are exact (entries stay minors of the input matrix).
IntPoly bareiss_poly_det(std::vector<std::vector<IntPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPoly::constant(1);
  int sign = 1;
  IntPoly prev = IntPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return IntPoly();  // singular
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        IntPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = num.divide_exact(prev);
      }
      m[i][k] = IntPoly();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// One prime step of the root-power transform: the resultant
// Res_Y(P(Y), X - Y^q) = prod_i (X - alpha_i^q), monic of degree deg P.
// The first Euclidean step is the exact rewrite Y^q -> X (unit leading
// coefficient); the tail resultant comes from a Sylvester determinant over
// Z[X], sized at most 2q-1.
IntPoly prime_power_step(const IntPoly& p, unsigned long q) {
  const long n = p.degree();
  // r(Y) := P(Y) mod (X - Y^q): base-q digit rewrite, coefficients in Z[X].
  std::vector<IntPoly> r(q);  // r[j] = coefficient of Y^j, an element of Z[X]
  for (long i = 0; i <= n; ++i) {
    const Int& c = p.at(static_cast<std::size_t>(i));
    if (c == 0) continue;
    std::size_t j = static_cast<std::size_t>(i) % q;
    std::size_t e = static_cast<std::size_t>(i) / q;
    r[j] = r[j] + IntPoly::monomial(c, e);
  }
  long dr = static_cast<long>(q) - 1;
  while (dr >= 0 && r[static_cast<std::size_t>(dr)].is_zero()) --dr;
  if (dr < 0) throw InternalFault("root_power_transform: zero rewrite");

  // Res(P, g) = (-1)^(n*q) * lc(g)^(n - dr) * Res(g, r) with lc(g) = -1.
  const long sign_exp = n * static_cast<long>(q) + n - dr;

  IntPoly res;
  if (dr == 0) {
    res = r[0].pow(q);  // Res(g, const) = const^deg(g)
  } else {
    // Sylvester matrix of g = -Y^q + X (degree q) and r (degree dr).
    const std::size_t size = q + static_cast<std::size_t>(dr);
    std::vector<std::vector<IntPoly>> syl(size, std::vector<IntPoly>(size));
    // g rows: coefficients of g in descending Y-degree: [-1, 0, ..., 0, X].
    for (std::size_t row = 0; row < static_cast<std::size_t>(dr); ++row) {
      syl[row][row] = IntPoly::constant(-1);
      syl[row][row + q] = IntPoly::x();
    }
    // r rows: descending coefficients r[dr], ..., r[0].
    for (std::size_t row = 0; row < q; ++row) {
      for (long j = dr; j >= 0; --j) {
        syl[static_cast<std::size_t>(dr) + row][row + static_cast<std::size_t>(dr - j)] =
            r[static_cast<std::size_t>(j)];
      }
    }
    res = bareiss_poly_det(std::move(syl));
  }
  if (sign_exp % 2 != 0) res = -res;
  if (res.degree() != n || !res.is_monic())
    throw InternalFault("root_power_transform: resultant is not monic of full degree");
  return res;
}

std::vector<unsigned long> prime_factors(unsigned long m) {
  std::vector<unsigned long> f;
  for (unsigned long q = 2; q * q <= m; ++q) {
    while (m % q == 0) {
      f.push_back(q);
      m /= q;
    }
  }
  if (m > 1) f.push_back(m);
  return f;
}

}  // namespace

IntPoly root_power_transform(const IntPoly& p, unsigned long m) {
  if (m < 1) throw std::invalid_argument("root_power_transform: m must be >= 1");
  if (!p.is_monic()) throw std::invalid_argument("root_power_transform: input must be monic");
  if (p.degree() == 0) return p;
  IntPoly result = p;
  for (unsigned long q : prime_factors(m)) result = prime_power_step(result, q);
  return result;
}

IntPoly reciprocal(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("reciprocal of zero polynomial");
  std::vector<Int> rev(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPoly(std::move(rev));
}

IntPoly cyclotomic(unsigned long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: level must be >= 1");
  static std::map<unsigned long, IntPoly> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // (X^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively.
  IntPoly num = IntPoly::monomial(1, n) - IntPoly::constant(1);
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    if (d < n) num = num.divide_exact(cyclotomic(d));
    unsigned long e = n / d;
    if (e != d && e < n) num = num.divide_exact(cyclotomic(e));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, num);
  return num;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      result -= result / q;
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_cyclotomic_product(const IntPoly& p) {
  if (!p.is_monic()) throw std::invalid_argument("is_cyclotomic_product: input must be monic");
  if (p.constant_term() == 0)
    throw std::invalid_argument("is_cyclotomic_product: P(0) must be nonzero");
  IntPoly rest = p;
  const unsigned long deg0 = static_cast<unsigned long>(p.degree());
  const unsigned long n_bound = 2 * deg0 * deg0;  // phi(N) >= sqrt(N/2)
  bool stripped = true;
  while (rest.degree() > 0 && stripped) {
    stripped = false;
    for (unsigned long n = 1; n <= std::max<unsigned long>(n_bound, 1); ++n) {
      if (euler_phi(n) > static_cast<unsigned long>(rest.degree())) continue;
      IntPoly g = IntPoly::gcd(rest, cyclotomic(n));
      while (g.degree() > 0) {
        rest = rest.divide_exact(g);
        stripped = true;
        if (rest.degree() == 0) break;
        g = IntPoly::gcd(rest, g);
      }
      if (rest.degree() == 0) break;
    }
  }
  return rest.degree() == 0;
}

std::optional<IntPoly> is_perfect_pth_power(const IntPoly& p, unsigned long prime_p) {
  if (p.is_zero()) throw std::invalid_argument("is_perfect_pth_power: zero polynomial");
  if (prime_p < 2) throw std::invalid_argument("is_perfect_pth_power: p must be prime");
  const long n = p.degree();
  if (n % static_cast<long>(prime_p) != 0) return std::nullopt;
  const long dq = n / static_cast<long>(prime_p);

  // Leading coefficient of the root.
  Int lead_root;
  if (p.lead() < 0 && prime_p % 2 == 0) return std::nullopt;
  {
    Int a = abs(p.lead());
    if (mpz_root(lead_root.get_mpz_t(), a.get_mpz_t(), prime_p) == 0) return std::nullopt;
    if (p.lead() < 0) lead_root = -lead_root;  // odd p here
  }

  // Coefficient matching from the top over Q, then exact verification.
  std::vector<Rat> q(static_cast<std::size_t>(dq) + 1, Rat(0));
  q[static_cast<std::size_t>(dq)] = Rat(lead_root);
  // Maintain qp = current Q^p as a truncated-from-the-top expansion: we solve
  // for q[dq - k] by matching the coefficient of X^(n - k).
  for (long k = 1; k <= dq; ++k) {
    // Compute coefficient of X^(n-k) of Q^p with current (partial) Q, where
    // q[dq-k] is still unknown (treated as 0). The unknown enters linearly
    // with factor p * lead_root^(p-1).
    // Brute-force convolution on the known part is fine at these sizes.
    std::vector<Rat> cur(static_cast<std::size_t>(n) + 1, Rat(0));
    cur[0] = Rat(1);
    long cur_deg = 0;
    for (unsigned long e = 0; e < prime_p; ++e) {
      std::vector<Rat> nxt(static_cast<std::size_t>(n) + 1, Rat(0));
      long nd = std::min<long>(cur_deg + dq, n);
      for (long i = 0; i <= cur_deg; ++i) {
        if (cur[static_cast<std::size_t>(i)] == 0) continue;
        for (long j = 0; j <= dq && i + j <= n; ++j) {
          if (q[static_cast<std::size_t>(j)] == 0) continue;
          nxt[static_cast<std::size_t>(i + j)] +=
              cur[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j)];
        }
      }
      cur = std::move(nxt);
      cur_deg = nd;
    }
    Rat target(p.at(static_cast<std::size_t>(n - k)));
    Rat known = cur[static_cast<std::size_t>(n - k)];
    Rat denom = Rat(static_cast<long>(prime_p)) * Rat(int_pow(lead_root, prime_p - 1));
    q[static_cast<std::size_t>(dq - k)] = (target - known) / denom;
  }

  std::vector<Int> qi(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!is_integer(q[i])) return std::nullopt;
    qi[i] = q[i].get_num();
  }
  IntPoly root(std::move(qi));
  if (root.pow(prime_p) != p) return std::nullopt;
  return root;
}

PowerSums power_sums(const IntPoly& p, unsigned long m_max) {
  if (!p.is_monic()) throw std::invalid_argument("power_sums: input must be monic");
  if (m_max < 1) throw std::invalid_argument("power_sums: M must be >= 1");
  const long n = p.degree();
  PowerSums out;
  out.values.resize(m_max);
  // Newton-Girard with e_k = (-1)^k * coeff of X^(n-k).
  auto e = [&](long k) -> Int {
    if (k < 0 || k > n) return Int(0);
    Int v = p.at(static_cast<std::size_t>(n - k));
    return (k % 2 == 0) ? v : -v;
  };
  for (unsigned long m = 1; m <= m_max; ++m) {
    Int s = 0;
    long jm = static_cast<long>(m);
    for (long i = 1; i < jm && i <= n; ++i) {
      Int term = e(i) * out.values[static_cast<std::size_t>(jm - i - 1)];
      s += (i % 2 == 0) ? -term : term;
    }
    if (jm <= n) {
      Int term = Int(jm) * e(jm);
      s += (jm % 2 == 0) ? -term : term;
    }
    out.values[m - 1] = s;
  }
  return out;
}

IntPoly poly_from_power_sums(const std::vector<Int>& sums, std::size_t n) {
  if (sums.size() < n) throw std::invalid_argument("poly_from_power_sums: need s_1..s_n");
  std::vector<Int> e(n + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // k e_k = sum_{i=1}^{k} (-1)^(i-1) e_{k-i} s_i
    Int acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      Int term = e[k - i] * sums[i - 1];
      acc += (i % 2 == 1) ? term : -term;
    }
    Int ek;
    Int kk(static_cast<long>(k));
    if (!mpz_divisible_p(acc.get_mpz_t(), kk.get_mpz_t()))
      throw InternalFault("poly_from_power_sums: inexact division");
    mpz_divexact(ek.get_mpz_t(), acc.get_mpz_t(), kk.get_mpz_t());
    e[k] = ek;
  }
  std::vector<Int> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Int v = e[k];
    coeffs[n - k] = (k % 2 == 0) ? v : -v;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace szkit
