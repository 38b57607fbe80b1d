#ifndef DIFFGAL_COMMON_HPP
#define DIFFGAL_COMMON_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace diffgal {

using QQ = mpq_class;
using ZZ = mpz_class;

struct math_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct spec_mismatch : math_error {
  using math_error::math_error;
};

inline bool is_zero(const QQ& q) { return sgn(q) == 0; }
inline bool is_zero(const ZZ& z) { return sgn(z) == 0; }

inline bool is_integer(const QQ& q) { return q.get_den() == 1; }

// Floor of num/den for exact integers.
inline ZZ floor_div(const ZZ& a, const ZZ& b) {
  ZZ q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline long to_long(const ZZ& z) {
  if (!z.fits_slong_p()) throw math_error("integer too large for machine word");
  return z.get_si();
}

inline long to_long(const QQ& q) {
  if (!is_integer(q)) throw math_error("expected an integer rational");
  return to_long(ZZ(q.get_num()));
}

// All divisors of |n|, unsorted; n must be nonzero and factor over word-size
// trial division (desk-scale inputs).
std::vector<ZZ> divisors(const ZZ& n);

std::string to_string(const QQ& q);

}  // namespace diffgal

#endif
