#ifndef DIFFGAL_TEST_UTIL_HPP
#define DIFFGAL_TEST_UTIL_HPP

#include <diffgal/diff_field.hpp>

namespace diffgal::testutil {

// deterministic xorshift for reproducible property tests
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed = 0x243f6a8885a308d3ull) : s(seed) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

inline QQ rand_rational(Rng& rng, long num_range = 5) {
  long n = rng.range(-num_range, num_range);
  long d = rng.range(1, 3);
  QQ q(n, d);
  q.canonicalize();
  return q;
}

inline APoly rand_poly(Rng& rng, int max_deg, bool nonzero = false) {
  APoly p;
  int d = static_cast<int>(rng.range(0, max_deg));
  for (int i = 0; i <= d; ++i) p.set_coeff(i, AlgNum(rand_rational(rng)));
  if (nonzero && p.zero()) p.set_coeff(0, AlgNum(1));
  return p;
}

inline APoly rand_monic_poly(Rng& rng, int deg) {
  APoly p;
  for (int i = 0; i < deg; ++i) p.set_coeff(i, AlgNum(rand_rational(rng)));
  p.set_coeff(deg, AlgNum(1));
  return p;
}

inline RatFunc rand_ratfunc(Rng& rng, int max_deg = 3, bool nonzero = false) {
  APoly num = rand_poly(rng, max_deg, nonzero);
  APoly den = rand_monic_poly(rng, static_cast<int>(rng.range(0, max_deg)));
  return RatFunc(num, den);
}

}  // namespace diffgal::testutil

#endif
