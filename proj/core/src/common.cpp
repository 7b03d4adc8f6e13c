#include "szkit/common.hpp"

#include <cmath>

namespace szkit {

double log_abs(const Int& v) {
  if (v == 0) throw std::invalid_argument("log_abs: zero argument");
  signed long exp2 = 0;
  double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(std::fabs(d)) + static_cast<double>(exp2) * std::log(2.0);
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool is_prime(unsigned long p) {
  Int v(static_cast<long>(p));
  return mpz_probab_prime_p(v.get_mpz_t(), 32) != 0;
}

}  // namespace szkit
