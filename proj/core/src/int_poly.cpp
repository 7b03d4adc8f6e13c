#include "szkit/int_poly.hpp"

#include <algorithm>
#include <sstream>

namespace szkit {

namespace {
const Int kZero = 0;
}

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  c_.reserve(ascending.size());
  for (long v : ascending) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::constant(Int v) {
  IntPoly p;
  if (v != 0) p.c_.push_back(std::move(v));
  return p;
}

IntPoly IntPoly::monomial(const Int& coeff, std::size_t degree) {
  IntPoly p;
  if (coeff != 0) {
    p.c_.assign(degree + 1, Int(0));
    p.c_[degree] = coeff;
  }
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::at(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

const Int& IntPoly::lead() const {
  if (c_.empty()) throw std::invalid_argument("lead of zero polynomial");
  return c_.back();
}

const Int& IntPoly::constant_term() const { return at(0); }

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = at(i) + o.at(i);
  r.trim();
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  IntPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = at(i) - o.at(i);
  r.trim();
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  IntPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

IntPoly IntPoly::operator*(const Int& s) const {
  if (s == 0) return IntPoly();
  IntPoly r(*this);
  for (auto& v : r.c_) v *= s;
  return r;
}

IntPoly operator*(const Int& s, const IntPoly& p) { return p * s; }

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  IntPoly r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Int(static_cast<long>(i));
  r.trim();
  return r;
}

IntPoly IntPoly::pow(unsigned long e) const {
  IntPoly result = IntPoly::constant(1);
  IntPoly base(*this);
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

IntPoly IntPoly::dilate(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("dilate: k must be positive");
  if (is_zero()) return IntPoly();
  IntPoly r;
  r.c_.assign((c_.size() - 1) * k + 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
  return r;
}

IntPoly IntPoly::negate_variable() const {
  IntPoly r(*this);
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

IntPoly IntPoly::shift_up(std::size_t k) const {
  if (is_zero()) return IntPoly();
  IntPoly r;
  r.c_.assign(c_.size() + k, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

double IntPoly::eval_double(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  Int g = content();
  if (lead() < 0) g = -g;
  IntPoly r(*this);
  for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return r;
}

std::optional<IntPoly> IntPoly::divide_if_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (is_zero()) return IntPoly();
  if (degree() < divisor.degree()) return std::nullopt;
  // Long division over Q, then integrality check on the quotient.
  std::vector<Rat> rem(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) rem[i] = Rat(c_[i]);
  const long dd = divisor.degree();
  const Rat dlead(divisor.lead());
  std::vector<Rat> quot(c_.size() - dd, Rat(0));
  for (long k = degree() - dd; k >= 0; --k) {
    Rat q = rem[k + dd] / dlead;
    quot[k] = q;
    if (q != 0) {
      for (long j = 0; j <= dd; ++j) rem[k + j] -= q * Rat(divisor.at(j));
    }
  }
  for (long j = 0; j < dd; ++j) {
    if (rem[j] != 0) return std::nullopt;
  }
  std::vector<Int> out(quot.size());
  for (std::size_t i = 0; i < quot.size(); ++i) {
    if (!is_integer(quot[i])) return std::nullopt;
    out[i] = quot[i].get_num();
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
  auto q = divide_if_exact(divisor);
  if (!q) throw InternalFault("divide_exact: division is not exact");
  return *q;
}

IntPoly IntPoly::pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_rem by zero");
  if (a.degree() < b.degree()) return a;
  IntPoly r = a;
  const long db = b.degree();
  const Int& lb = b.lead();
  long steps = a.degree() - db + 1;
  while (!r.is_zero() && r.degree() >= db) {
    const Int lr = r.lead();
    const long shift = r.degree() - db;
    // r <- lb*r - lr*X^shift*b
    IntPoly t = b.shift_up(static_cast<std::size_t>(shift)) * lr;
    r = r * lb - t;
    --steps;
  }
  // Pad the multiplier so the result equals lb^(da-db+1) * a mod b exactly.
  while (steps-- > 0) r = r * lb;
  return r;
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly u = a.is_zero() ? a : a.primitive_part();
  IntPoly v = b.is_zero() ? b : b.primitive_part();
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = pseudo_rem(u, v);
    u = std::move(v);
    v = r.is_zero() ? IntPoly() : r.primitive_part();
  }
  return u;  // primitive, positive leading coefficient
}

IntPoly IntPoly::squarefree_part() const {
  if (is_zero()) return IntPoly();
  IntPoly p = primitive_part();
  if (p.degree() == 0) return IntPoly::constant(1);
  IntPoly g = gcd(p, p.derivative());
  return p.divide_exact(g).primitive_part();
}

std::vector<IntPoly> IntPoly::squarefree_decomposition() const {
  // Yun's algorithm on the primitive part.
  std::vector<IntPoly> out;
  if (is_zero()) return out;
  IntPoly p = primitive_part();
  if (p.degree() < 1) return out;
  IntPoly g = gcd(p, p.derivative());
  if (g.degree() == 0) {
    out.push_back(p);
    return out;
  }
  IntPoly w = p.divide_exact(g);
  IntPoly y = p.derivative().divide_exact(g);
  while (true) {
    IntPoly z = y - w.derivative();
    if (z.is_zero()) {
      out.push_back(w);
      break;
    }
    IntPoly f = gcd(w, z);
    out.push_back(f);
    w = w.divide_exact(f);
    y = z.divide_exact(f);
  }
  return out;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Int& v = at(static_cast<std::size_t>(i));
    if (v == 0) continue;
    Int a = abs(v);
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? "-" : "+");
    }
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace szkit
