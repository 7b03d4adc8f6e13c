#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "szkit/common.hpp"

namespace szkit {

// Dense integer polynomial with arbitrary-precision coefficients.
// coeffs[i] is the coefficient of X^i. The canonical zero polynomial is the
// empty sequence; otherwise the top coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { trim(); }
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(Int v);
  static IntPoly monomial(const Int& coeff, std::size_t degree);
  // X as a polynomial.
  static IntPoly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  // degree() of the zero polynomial is -1 by convention.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  // Coefficient of X^i; zero beyond the stored range.
  const Int& at(std::size_t i) const;
  const Int& lead() const;
  const Int& constant_term() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const Int& s) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  IntPoly derivative() const;
  IntPoly pow(unsigned long e) const;
  // P(X^k): spreads coefficients k apart.
  IntPoly dilate(std::size_t k) const;
  // P(-X).
  IntPoly negate_variable() const;
  // X^k * P.
  IntPoly shift_up(std::size_t k) const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  double eval_double(double x) const;

  // gcd of all coefficients, nonnegative; content of zero is 0.
  Int content() const;
  IntPoly primitive_part() const;

  // Exact division: throws InternalFault unless divisor divides *this in Z[X].
  IntPoly divide_exact(const IntPoly& divisor) const;
  // True division test over Q[X]: quotient if remainder is zero and the
  // quotient has integer coefficients.
  std::optional<IntPoly> divide_if_exact(const IntPoly& divisor) const;
  // Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[X].
  static IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

  // Primitive gcd via the primitive polynomial remainder sequence, normalized
  // to a positive leading coefficient. gcd(0, b) = primitive |b|.
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

  // Largest squarefree divisor (primitive, positive leading coefficient).
  IntPoly squarefree_part() const;
  // Yun decomposition: returns factors F_1, F_2, ... with
  // primitive_part(*this) = prod F_i^i (F_i squarefree, possibly constant 1).
  std::vector<IntPoly> squarefree_decomposition() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Int> c_;
};

IntPoly operator*(const Int& s, const IntPoly& p);

}  // namespace szkit
