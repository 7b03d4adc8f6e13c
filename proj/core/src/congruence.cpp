#include "szkit/congruence.hpp"

#include "szkit/poly_ops.hpp"

namespace szkit {

namespace {

bool all_divisible(const IntPoly& p, const Int& modulus) {
  for (const auto& c : p.coeffs()) {
    if (!mpz_divisible_p(c.get_mpz_t(), modulus.get_mpz_t())) return false;
  }
  return true;
}

}  // namespace

bool verify_mod4(const IntPoly& p) { return verify_prime_congruence(p, 2); }

bool verify_prime_congruence(const IntPoly& p, unsigned long prime_p) {
  return prime_congruence_witness(p, prime_p).holds;
}

CongruenceWitness prime_congruence_witness(const IntPoly& p, unsigned long prime_p) {
  if (!p.is_monic()) throw std::invalid_argument("prime congruence: input must be monic");
  if (!is_prime(prime_p)) throw std::invalid_argument("prime congruence: p must be prime");
  IntPoly pp = root_power_transform(p, prime_p);
  IntPoly pp2 = root_power_transform(pp, prime_p);
  CongruenceWitness w;
  w.difference = pp2 - pp;
  Int mod = Int(static_cast<long>(prime_p)) * Int(static_cast<long>(prime_p));
  w.holds = all_divisible(w.difference, mod);
  if (w.holds) {
    std::vector<Int> q(w.difference.coeffs().size());
    for (std::size_t i = 0; i < q.size(); ++i)
      mpz_divexact(q[i].get_mpz_t(), w.difference.coeffs()[i].get_mpz_t(), mod.get_mpz_t());
    w.witness = IntPoly(std::move(q));
  }
  return w;
}

std::optional<SquareCertificate> certify_square_mod4(const IntPoly& q) {
  if (q.constant_term() != 1)
    throw std::invalid_argument("certify_square_mod4: Q(0) must equal 1");
  const long dq = q.degree();
  // Coefficient recursion for U = 1 + u_1 X + ...: at each k the condition is
  // 2 u_k == q_k - sum_{0<i<k} u_i u_{k-i} (mod 4), solvable iff the right
  // side is even. Lift choices differ by 2 and never affect later
  // solvability, so the greedy walk is complete. A square root of a
  // unit-constant polynomial can always be normalized to coefficients in
  // {-1, 0, 1} and degree <= deg(Q)/2.
  std::vector<Int> u(static_cast<std::size_t>(dq) + 1, Int(0));
  u[0] = 1;
  for (long k = 1; k <= dq; ++k) {
    Int rhs = q.at(static_cast<std::size_t>(k));
    for (long i = 1; i < k; ++i) rhs -= u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(k - i)];
    if (mpz_odd_p(rhs.get_mpz_t())) return std::nullopt;
    Int half = rhs / 2;
    if (mpz_odd_p(half.get_mpz_t())) {
      u[static_cast<std::size_t>(k)] = (half < 0) ? -1 : 1;
    }
  }
  IntPoly upoly{std::vector<Int>(u)};
  IntPoly residue = q - upoly * upoly;
  for (const auto& c : residue.coeffs()) {
    if (!mpz_divisible_ui_p(c.get_mpz_t(), 4)) return std::nullopt;
  }
  std::vector<Int> v(residue.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i)
    mpz_divexact_ui(v[i].get_mpz_t(), residue.coeffs()[i].get_mpz_t(), 4);
  SquareCertificate cert{upoly, IntPoly(std::move(v))};
  if (cert.u * cert.u + cert.v * Int(4) != q)
    throw InternalFault("certify_square_mod4: certificate self-check failed");
  return cert;
}

Rat v_adic_radius(const IntPoly& p, unsigned long ell, int e, unsigned long prime_p) {
  if (p.constant_term() == 0) throw std::invalid_argument("v_adic_radius: P(0) must be nonzero");
  if (!is_prime(ell)) throw std::invalid_argument("v_adic_radius: l must be prime");
  if (e != 1 && e != 2) throw std::invalid_argument("v_adic_radius: e must be 1 or 2");
  if (!is_prime(prime_p)) throw std::invalid_argument("v_adic_radius: p must be prime");
  const Int l(static_cast<long>(ell));
  auto val = [&](const Int& c) -> unsigned long {
    Int t = c;
    unsigned long v = 0;
    while (mpz_divisible_p(t.get_mpz_t(), l.get_mpz_t())) {
      mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), l.get_mpz_t());
      ++v;
    }
    return v;
  };
  unsigned long v0 = val(p.constant_term());
  unsigned long vmin = v0;
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    vmin = std::min(vmin, val(c));
  }
  // ratio = l^-(v0 - vmin); exponent p^(e+1)
  unsigned long pe = 1;
  for (int i = 0; i < e + 1; ++i) pe *= prime_p;
  Int denom = int_pow(l, (v0 - vmin) * pe);
  return make_rat(1, denom);
}

}  // namespace szkit
