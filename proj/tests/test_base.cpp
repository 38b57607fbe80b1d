#include <doctest.h>

#include <diffgal/intmat.hpp>
#include <diffgal/poly.hpp>
#include <diffgal/zfactor.hpp>

using namespace diffgal;

namespace {
QPoly qp(std::initializer_list<int> asc) {
  QPoly p;
  int i = 0;
  for (int c : asc) p.set_coeff(i++, QQ(c));
  return p;
}
}  // namespace

TEST_CASE("polynomial division and gcd") {
  QPoly a = qp({-1, 0, 1});  // z^2 - 1
  QPoly b = qp({-1, 1});     // z - 1
  QPoly q, r;
  QPoly::divrem(a, b, q, r);
  CHECK(r.zero());
  CHECK(q == qp({1, 1}));
  CHECK(QPoly::gcd(a, b) == b.monic());

  QPoly s, t;
  QPoly g = QPoly::xgcd(qp({1, 0, 1}), qp({1, 1}), s, t);
  CHECK(g == qp({1}));
  CHECK(s * qp({1, 0, 1}) + t * qp({1, 1}) == qp({1}));
}

TEST_CASE("squarefree decomposition") {
  QPoly f = qp({-1, 1}) * qp({-1, 1}) * qp({1, 1}) * qp({0, 1}).pow(3);
  auto dec = squarefree_decomposition(f);
  REQUIRE(dec.size() == 3);
  CHECK(dec[0].first == qp({1, 1}));
  CHECK(dec[0].second == 1);
  CHECK(dec[1].first == qp({-1, 1}));
  CHECK(dec[1].second == 2);
  CHECK(dec[2].first == qp({0, 1}));
  CHECK(dec[2].second == 3);
}

TEST_CASE("rational factorization") {
  // (z^2+1)(z-3)(z+5)^2
  QPoly f = qp({1, 0, 1}) * qp({-3, 1}) * qp({5, 1}) * qp({5, 1});
  auto fac = factor_rational(f);
  REQUIRE(fac.size() == 3);
  bool has_quad = false, has_lin = false, has_sq = false;
  for (auto& [g, m] : fac) {
    if (g == qp({1, 0, 1}) && m == 1) has_quad = true;
    if (g == qp({-3, 1}) && m == 1) has_lin = true;
    if (g == qp({5, 1}) && m == 2) has_sq = true;
  }
  CHECK(has_quad);
  CHECK(has_lin);
  CHECK(has_sq);

  CHECK(is_irreducible_rational(qp({-1, -1, 1})));  // z^2 - z - 1
  CHECK(is_irreducible_rational(qp({1, 1, 1, 1, 1})));
  CHECK_FALSE(is_irreducible_rational(qp({-1, 0, 1})));

  // degree-6 product of two cubics
  QPoly c1 = qp({-2, 0, 0, 1});          // z^3 - 2
  QPoly c2 = qp({1, 3, 0, 1});           // z^3 + 3z + 1
  auto fac6 = factor_squarefree_rational(c1 * c2);
  REQUIRE(fac6.size() == 2);
  CHECK(((fac6[0] == c1 && fac6[1] == c2) || (fac6[0] == c2 && fac6[1] == c1)));
}

TEST_CASE("integer roots") {
  QPoly f = qp({6, -5, 1});  // (z-2)(z-3)
  auto r = integer_roots(f);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == 2);
  CHECK(r[1] == 3);
  QPoly g = qp({0, 0, 1});  // z^2: root 0
  auto r2 = integer_roots(g);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0] == 0);
}

TEST_CASE("hermite and smith normal forms") {
  IMat m(2, 3);
  m(0, 0) = 2;
  m(0, 1) = 4;
  m(0, 2) = 4;
  m(1, 0) = -6;
  m(1, 1) = 6;
  m(1, 2) = 12;
  IMat u;
  IMat h = hnf_rows(m, &u);
  // U*m == h
  IMat um = u * m;
  CHECK(um == h);

  IMat l, rgt;
  IMat d = snf(m, &l, &rgt);
  IMat lmr = (l * m) * rgt;
  CHECK(lmr == d);
  CHECK(d(0, 0) == 2);
  CHECK(d(1, 1) == 6);
  // divisibility chain
  CHECK(d(1, 1) % d(0, 0) == 0);
}

TEST_CASE("integer kernel") {
  // kernel of [1 1 1; 0 1 2] = span{(1,-2,1)}
  IMat m(2, 3);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(0, 2) = 1;
  m(1, 0) = 0;
  m(1, 1) = 1;
  m(1, 2) = 2;
  IMat k = integer_kernel(m);
  REQUIRE(k.rows() == 1);
  CHECK(k(0, 0) * 1 + k(0, 1) * 1 + k(0, 2) * 1 == 0);
  CHECK(k(0, 1) * 1 + k(0, 2) * 2 == 0);
}

TEST_CASE("bezout vector") {
  ZZ g;
  auto x = bezout_vector({ZZ(12), ZZ(18), ZZ(10)}, g);
  CHECK(g == 2);
  CHECK(x[0] * 12 + x[1] * 18 + x[2] * 10 == 2);
}
