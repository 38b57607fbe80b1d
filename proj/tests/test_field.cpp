#include <doctest.h>

#include <diffgal/diff_field.hpp>

#include "test_util.hpp"

using namespace diffgal;
using testutil::Rng;

namespace {

RatFunc parse_simple(std::initializer_list<int> num, std::initializer_list<int> den) {
  APoly n, d;
  int i = 0;
  for (int c : num) n.set_coeff(i++, AlgNum(c));
  i = 0;
  for (int c : den) d.set_coeff(i++, AlgNum(c));
  return RatFunc(n, d);
}

}  // namespace

TEST_CASE("phi substitutions") {
  auto tw = Tower::create();
  auto S = DiffField::make_shift(tw, AlgNum(1));
  auto Q = DiffField::make_qdiff(tw, AlgNum(2));

  RatFunc z = RatFunc::z();
  // (S, h=1): z^2 -> (z+1)^2
  CHECK(phi(z * z, *S, 1) == (z + RatFunc(1)) * (z + RatFunc(1)));
  // (Q, q=2, power=-1): z^3 -> z^3/8
  CHECK(phi(z * z * z, *Q, -1) == RatFunc(AlgNum(QQ(1, 8))) * z * z * z);
  // (Q, q=2, power=2): (z-1)/(z+1) -> (4z-1)/(4z+1)
  RatFunc f = parse_simple({-1, 1}, {1, 1});
  CHECK(phi(f, *Q, 2) == parse_simple({-1, 4}, {1, 4}));
}

TEST_CASE("phi is a field automorphism (property)") {
  auto tw = Tower::create();
  auto S = DiffField::make_shift(tw, AlgNum(QQ(1)));
  auto Q = DiffField::make_qdiff(tw, AlgNum(QQ(3, 2)));
  Rng rng;
  for (int trial = 0; trial < 200; ++trial) {
    const DiffField& fld = (trial % 2 == 0) ? *S : *Q;
    RatFunc a = testutil::rand_ratfunc(rng);
    RatFunc b = testutil::rand_ratfunc(rng);
    CHECK(phi(a + b, fld) == phi(a, fld) + phi(b, fld));
    CHECK(phi(a * b, fld) == phi(a, fld) * phi(b, fld));
    CHECK(phi(phi(a, fld, 1), fld, -1) == a);
    CHECK(phi(a, fld, 3) == phi(phi(phi(a, fld), fld), fld));
  }
}

TEST_CASE("derivation commutes with phi") {
  auto tw = Tower::create();
  auto S = DiffField::make_shift(tw, AlgNum(2));
  auto Q = DiffField::make_qdiff(tw, AlgNum(5));
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    for (auto* fld : {S.get(), Q.get()}) {
      RatFunc a = testutil::rand_ratfunc(rng);
      CHECK(derive(phi(a, *fld), *fld) == phi(derive(a, *fld), *fld));
    }
  }
}

TEST_CASE("dispersion examples") {
  auto tw = Tower::create();
  auto S = DiffField::make_shift(tw, AlgNum(1));
  auto Q = DiffField::make_qdiff(tw, AlgNum(2));

  APoly z = APoly::x();
  APoly z_minus_3 = z - APoly(AlgNum(3));
  auto d1 = dispersion(z, z_minus_3, *S);
  CHECK(d1 == std::set<long>{3});

  APoly z_minus_4 = z - APoly(AlgNum(4));
  APoly z_minus_1 = z - APoly(AlgNum(1));
  auto d2 = dispersion(z_minus_4, z_minus_1, *Q);
  CHECK(d2 == std::set<long>{2});

  auto d3 = dispersion(APoly(AlgNum(1)), z, *S);
  CHECK(d3.empty());
}

TEST_CASE("dispersion equals brute-force gcd scan (property)") {
  auto tw = Tower::create();
  auto S = DiffField::make_shift(tw, AlgNum(1));
  auto Q = DiffField::make_qdiff(tw, AlgNum(2));
  Rng rng(7);
  auto brute = [](const APoly& p, const APoly& r, const DiffField& fld, long bound) {
    std::set<long> out;
    for (long j = 0; j <= bound; ++j) {
      if (APoly::gcd(p, phi_poly(r, fld, j)).degree() > 0) out.insert(j);
      if (APoly::gcd(phi_poly(p, fld, j), r).degree() > 0) out.insert(j);
    }
    return out;
  };
  for (int trial = 0; trial < 40; ++trial) {
    for (auto* fld : {S.get(), Q.get()}) {
      // products of small integer-rooted linear factors keep collisions in a
      // scannable window
      APoly p(AlgNum(1)), r(AlgNum(1));
      for (int k = 0; k < 3; ++k) {
        long rp = rng.range(fld->kind() == CaseKind::Q ? 1 : -4, 4);
        long rr = rng.range(fld->kind() == CaseKind::Q ? 1 : -4, 4);
        if (rng.range(0, 1)) p = p * (APoly::x() - APoly(AlgNum(rp)));
        if (rng.range(0, 1)) r = r * (APoly::x() - APoly(AlgNum(rr)));
      }
      long bound = fld->kind() == CaseKind::S ? 10 : 4;
      CHECK(dispersion(p, r, *fld) == brute(p, r, *fld, bound));
    }
  }
}

TEST_CASE("discrete log") {
  auto tw = Tower::create();
  CHECK(discrete_log(AlgNum(8), AlgNum(2)) == 3);
  CHECK(discrete_log(AlgNum(QQ(1, 4)), AlgNum(2)) == -2);
  CHECK(discrete_log(AlgNum(1), AlgNum(2)) == 0);
  CHECK_FALSE(discrete_log(AlgNum(3), AlgNum(2)).has_value());
  CHECK_FALSE(discrete_log(AlgNum(-8), AlgNum(2)).has_value());
  CHECK(discrete_log(AlgNum(QQ(9, 4)), AlgNum(QQ(3, 2))) == 2);

  APoly x2m2;
  x2m2.set_coeff(0, AlgNum(-2));
  x2m2.set_coeff(2, AlgNum(1));
  AlgNum s2 = adjoin_root(tw.get(), x2m2);
  CHECK(discrete_log(AlgNum(2) * s2, s2) == 3);  // (sqrt2)^3 = 2 sqrt2
  CHECK_FALSE(discrete_log(AlgNum(3), s2).has_value());
}

TEST_CASE("torsion shift") {
  auto tw = Tower::create();
  // a = -1/4, q = 2: a*q^2 = -1, torsion order 2
  auto t = torsion_shift(AlgNum(QQ(-1, 4)), AlgNum(2));
  REQUIRE(t.has_value());
  CHECK(t->first == 2);
  CHECK(t->second == 2);
  CHECK_FALSE(torsion_shift(AlgNum(3), AlgNum(2)).has_value());
  auto t2 = torsion_shift(AlgNum(1), AlgNum(2));
  REQUIRE(t2.has_value());
  CHECK(t2->first == 0);
  CHECK(t2->second == 1);
}

TEST_CASE("q must not be a root of unity") {
  auto tw = Tower::create();
  CHECK_THROWS(DiffField::make_qdiff(tw, AlgNum(-1)));
  CHECK_THROWS(DiffField::make_qdiff(tw, AlgNum(0)));
  CHECK_THROWS(DiffField::make_shift(tw, AlgNum(0)));
}
