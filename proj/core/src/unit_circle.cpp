#include "szkit/unit_circle.hpp"

#include "szkit/poly_ops.hpp"

namespace szkit {

namespace {

// Remainder scaled by a positive constant, preserving the sign structure the
// Sturm chain needs.
IntPoly signed_rem(const IntPoly& a, const IntPoly& b) {
  IntPoly r = IntPoly::pseudo_rem(a, b);
  long e = a.degree() - b.degree() + 1;
  if (b.lead() < 0 && e % 2 != 0) r = -r;
  if (r.is_zero()) return r;
  Int c = r.content();
  std::vector<Int> out(r.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    mpz_divexact(out[i].get_mpz_t(), r.coeffs()[i].get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(out));
}

long sign_changes(const std::vector<IntPoly>& chain, const Rat& x) {
  long count = 0;
  int prev = 0;
  for (const auto& p : chain) {
    Rat v = p.eval(x);
    int s = sgn(v);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

long sturm_count(const IntPoly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (p.eval(a) == 0 || p.eval(b) == 0)
    throw std::invalid_argument("sturm_count: endpoint is a root");
  IntPoly f = p.squarefree_part();
  std::vector<IntPoly> chain{f, f.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() >= 0) {
    const IntPoly& s1 = chain[chain.size() - 2];
    const IntPoly& s2 = chain.back();
    if (s2.degree() == 0) break;
    IntPoly r = signed_rem(s1, s2);
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return sign_changes(chain, a) - sign_changes(chain, b);
}

long unit_circle_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("unit_circle_roots: zero polynomial");
  if (p.constant_term() == 0)
    throw std::invalid_argument("unit_circle_roots: P(0) must be nonzero");
  if (p.degree() == 0) return 0;

  IntPoly g = IntPoly::gcd(p, reciprocal(p));
  if (g.degree() == 0) return 0;

  // Multiplicities of unit-circle roots in g equal those in p, so count in g.
  long count = 0;
  for (long s : {1L, -1L}) {
    IntPoly lin{-s, 1};  // X - s
    while (g.degree() >= 1 && g.eval(Int(s)) == 0) {
      g = g.divide_exact(lin);
      ++count;
    }
  }
  if (g.degree() == 0) return count;

  if (g != reciprocal(g))
    throw InternalFault("unit_circle_roots: residual gcd is not palindromic");
  const long d2 = g.degree();
  if (d2 % 2 != 0) throw InternalFault("unit_circle_roots: palindromic part has odd degree");
  const long d = d2 / 2;

  // h(t) with g(z) = z^d h(z + 1/z), via z^k + z^-k = v_k(t),
  // v_0 = 2, v_1 = t, v_k = t v_{k-1} - v_{k-2}.
  std::vector<IntPoly> v(static_cast<std::size_t>(d) + 1);
  v[0] = IntPoly{2};
  if (d >= 1) v[1] = IntPoly::x();
  for (long k = 2; k <= d; ++k)
    v[static_cast<std::size_t>(k)] =
        IntPoly::x() * v[static_cast<std::size_t>(k - 1)] - v[static_cast<std::size_t>(k - 2)];
  IntPoly h = IntPoly::constant(g.at(static_cast<std::size_t>(d)));
  for (long k = 1; k <= d; ++k)
    h = h + v[static_cast<std::size_t>(k)] * g.at(static_cast<std::size_t>(d + k));

  // Roots of h in (-2, 2) with multiplicity; each gives the conjugate pair
  // e^{i theta}, e^{-i theta}.
  auto factors = h.squarefree_decomposition();
  const Rat lo(-2), hi(2);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    count += 2 * static_cast<long>(i + 1) * sturm_count(factors[i], lo, hi);
  }
  return count;
}

}  // namespace szkit
