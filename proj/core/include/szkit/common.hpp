#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace szkit {

// Exact arithmetic carriers used throughout the library. Rationals are kept
// canonical (lowest terms, positive denominator) at every construction site.
using Int = mpz_class;
using Rat = mpq_class;

// Raised when a certified comparison cannot be decided at the requested
// tolerance / precision cap. CLI maps this to exit code 3.
class Undecided : public std::runtime_error {
 public:
  explicit Undecided(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a mathematically guaranteed property fails to hold, which
// signals a bug in this library rather than bad input.
class InternalFault : public std::logic_error {
 public:
  explicit InternalFault(const std::string& what) : std::logic_error(what) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// log |v| for huge integers without overflow; v must be nonzero.
double log_abs(const Int& v);

// Floor of log base-independent helpers.
Int int_pow(const Int& base, unsigned long e);
bool is_prime(unsigned long p);

}  // namespace szkit
