#include <doctest.h>

#include <diffgal/ratsolve.hpp>

#include "test_util.hpp"

using namespace diffgal;
using testutil::Rng;

namespace {

OreOp scalar_op(const FieldPtr& fld, std::vector<RatFunc> asc) {
  std::map<long, RatFunc> c;
  for (size_t i = 0; i < asc.size(); ++i)
    if (!asc[i].zero()) c[static_cast<long>(i)] = asc[i];
  return OreOp(fld, c);
}

// Independent brute-force oracle: all y = f / D with deg f <= deg D + extra,
// where D is an explicit pole-rich denominator built from the coefficient
// supports (no Abramov machinery involved).
std::vector<RatFunc> brute_rational_solutions(const OreOp& L, int window, int extra,
                                              int mult = 2) {
  const DiffField& fld = *L.field();
  std::vector<RatFunc> a = L.equation_coeffs();
  int n = static_cast<int>(a.size()) - 1;
  APoly D(AlgNum(1));
  APoly prod(AlgNum(1));
  prod = a[0].num() * a[static_cast<size_t>(n)].num();
  for (int j = -window; j <= window; ++j) {
    APoly s = phi_poly(prod, fld, j);
    for (int m = 0; m < mult; ++m) D = D * s;
  }
  if (fld.kind() == CaseKind::Q) {
    // poles at 0 via explicit z-powers
    D = D * APoly::monomial(AlgNum(1), window);
  }
  int fdeg = D.degree() + extra;
  // unknown numerator coefficients; rows from the cleared equation
  std::vector<APoly> b(static_cast<size_t>(n) + 1);
  APoly U(AlgNum(1));
  std::vector<APoly> shifted(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    shifted[static_cast<size_t>(i)] = phi_poly(D, fld, i);
    U = U * shifted[static_cast<size_t>(i)];
  }
  for (int i = 0; i <= n; ++i)
    b[static_cast<size_t>(i)] = a[static_cast<size_t>(i)].num() * (U / shifted[static_cast<size_t>(i)]);
  // columns: z^k for k in 0..fdeg; rows: z-coefficients of sum b_i phi^i(z^k)
  long min_e = LONG_MAX, max_e = LONG_MIN;
  std::vector<APoly> images(static_cast<size_t>(fdeg) + 1);
  for (int k = 0; k <= fdeg; ++k) {
    APoly img;
    for (int i = 0; i <= n; ++i) {
      if (b[static_cast<size_t>(i)].zero()) continue;
      APoly zk = phi_poly(APoly::monomial(AlgNum(1), k), fld, i);
      img = img + b[static_cast<size_t>(i)] * zk;
    }
    images[static_cast<size_t>(k)] = img;
    if (!img.zero()) {
      min_e = std::min(min_e, (long)img.valuation());
      max_e = std::max(max_e, (long)img.degree());
    }
  }
  std::vector<RatFunc> out;
  if (min_e > max_e) return out;
  Mat<AlgNum> sys(static_cast<int>(max_e - min_e + 1), fdeg + 1);
  for (int k = 0; k <= fdeg; ++k)
    for (int e = 0; e <= images[static_cast<size_t>(k)].degree(); ++e) {
      if (is_zero(images[static_cast<size_t>(k)][e])) continue;
      sys(static_cast<int>(e - min_e), k) = images[static_cast<size_t>(k)][e];
    }
  for (auto& v : nullspace(sys)) {
    APoly f;
    for (size_t i = 0; i < v.size(); ++i) f.set_coeff(static_cast<int>(i), v[i]);
    if (!f.zero()) out.push_back(RatFunc(f, D));
  }
  return out;
}

int space_dimension(const std::vector<RatFunc>& gens) {
  // dimension over constants of the span: collect coefficient vectors over a
  // common denominator
  if (gens.empty()) return 0;
  APoly den(AlgNum(1));
  for (auto& g : gens) den = den * (g.den() / APoly::gcd(den, g.den()));
  std::vector<APoly> nums;
  int maxdeg = -1;
  for (auto& g : gens) {
    APoly nm = g.num() * (den / g.den());
    maxdeg = std::max(maxdeg, nm.degree());
    nums.push_back(nm);
  }
  Mat<AlgNum> m(static_cast<int>(gens.size()), maxdeg + 1);
  for (size_t r = 0; r < nums.size(); ++r)
    for (int e = 0; e <= nums[r].degree(); ++e) m(static_cast<int>(r), e) = nums[r][e];
  Mat<AlgNum> mm = m;
  return static_cast<int>(rref(mm).size());
}

}  // namespace

TEST_CASE("scalar rational solutions: constructed examples") {
  auto tw = Tower::create();
  auto S = DiffField::make_shift(tw, AlgNum(1));
  auto Qf = DiffField::make_qdiff(tw, AlgNum(2));
  RatFunc z = RatFunc::z();

  // phi(y) - ((z+1)/z) y = 0 -> basis {z}
  OreOp L1 = scalar_op(S, {-(z + RatFunc(1)) / z, RatFunc(1)});
  auto s1 = rational_solutions_scalar(L1);
  REQUIRE(s1.dimension() == 1);
  CHECK(s1.basis[0][0] * s1.basis[0][0].inverse() == RatFunc(1));
  // solution is c*z
  RatFunc ratio = s1.basis[0][0] / z;
  CHECK(ratio.is_constant());

  // Case Q: phi(y) - q y -> basis {z}
  OreOp L2 = scalar_op(Qf, {RatFunc(AlgNum(-2)), RatFunc(1)});
  auto s2 = rational_solutions_scalar(L2);
  REQUIRE(s2.dimension() == 1);
  CHECK((s2.basis[0][0] / z).is_constant());

  // Case Q: phi(y) - 2z y -> empty
  OreOp L3 = scalar_op(Qf, {RatFunc(AlgNum(-2)) * z, RatFunc(1)});
  CHECK(rational_solutions_scalar(L3).dimension() == 0);

  // (phi - 1)^2: solutions {1, z} over S with h=1
  OreOp phi_op = OreOp::phi_power(S, 1);
  OreOp one = OreOp::from_ratfunc(S, RatFunc(1));
  auto s4 = rational_solutions_scalar((phi_op - one) * (phi_op - one));
  CHECK(s4.dimension() == 2);
}

TEST_CASE("multiplicative solve") {
  auto tw = Tower::create();
  auto S = DiffField::make_shift(tw, AlgNum(1));
  auto Qf = DiffField::make_qdiff(tw, AlgNum(2));
  RatFunc z = RatFunc::z();

  auto f1 = multiplicative_solve(RatFunc(AlgNum(2)), Qf);  // q = 2: f = z
  REQUIRE(f1.has_value());
  CHECK(phi(*f1, *Qf) / *f1 == RatFunc(AlgNum(2)));

  auto f2 = multiplicative_solve(RatFunc(1), S);
  REQUIRE(f2.has_value());
  CHECK(phi(*f2, *S) / *f2 == RatFunc(1));

  CHECK_FALSE(multiplicative_solve(z, S).has_value());

  auto f3 = multiplicative_solve((z + RatFunc(1)) / z, S);
  REQUIRE(f3.has_value());
  CHECK(phi(*f3, *S) / *f3 == (z + RatFunc(1)) / z);
}

TEST_CASE("scalar solutions match brute force (property)") {
  auto tw = Tower::create();
  auto S = DiffField::make_shift(tw, AlgNum(1));
  auto Qf = DiffField::make_qdiff(tw, AlgNum(2));
  Rng rng(101);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const FieldPtr& fld = trial % 2 ? Qf : S;
    // build operators with small integer-rooted coefficients so the oracle
    // window is adequate
    auto rand_coeff = [&](bool nonzero) {
      APoly p(AlgNum(rng.range(1, 3)));
      int nf = static_cast<int>(rng.range(0, 2));
      for (int k = 0; k < nf; ++k) {
        long root = rng.range(fld->kind() == CaseKind::Q ? 1 : -2, 2);
        p = p * (APoly::x() - APoly(AlgNum(root)));
      }
      if (nonzero && p.zero()) p = APoly(AlgNum(1));
      return RatFunc(p);
    };
    int n = static_cast<int>(rng.range(1, 2));
    std::vector<RatFunc> coeffs;
    for (int i = 0; i <= n; ++i) coeffs.push_back(rand_coeff(i == 0 || i == n));
    OreOp L = scalar_op(fld, coeffs);
    if (L.zero() || L.order() < 1) continue;
    auto mine = rational_solutions_scalar(L);
    auto brute = brute_rational_solutions(L, 8, 12);
    // compare dimensions of the two spans
    std::vector<RatFunc> mine_flat;
    for (auto& v : mine.basis) mine_flat.push_back(v[0]);
    CHECK(space_dimension(mine_flat) == space_dimension(brute));
    // and inclusion: every brute solution satisfies, every mine too (already
    // asserted in-library); cross-check brute members against the equation
    for (auto& y : brute) CHECK(L.apply(y) == RatFunc(0));
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("system solutions: identity system has constant basis") {
  auto tw = Tower::create();
  auto S = DiffField::make_shift(tw, AlgNum(1));
  MatK A = MatK::identity(S, 2);
  auto sols = rational_solutions_system(A);
  CHECK(sols.homogeneous.size() == 2);
  for (auto& Y : sols.homogeneous)
    for (auto& y : Y)
      if (!y.zero()) CHECK(y.is_constant());
}

TEST_CASE("system solutions: planted unipotent gauge recovered") {
  auto tw = Tower::create();
  auto S = DiffField::make_shift(tw, AlgNum(1));
  Rng rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    // D = Diag(d1, d2) with d1, d2 in {1, (z+1)/z}-ish; plant X so that
    // A~ + phi(X) D2 = X D1 has the planted solution
    RatFunc z = RatFunc::z();
    RatFunc d1 = (trial % 2) ? (z + RatFunc(1)) / z : RatFunc(1);
    RatFunc d2 = RatFunc(trial % 3 == 0 ? 2 : 1);
    RatFunc x = testutil::rand_ratfunc(rng, 2);
    // A~ := x d1 - phi(x) d2
    RatFunc at = x * d1 - phi(x, *S) * d2;
    // solve phi(X) d2 - X d1 = -at, i.e. the 1x1 system phi(X) = (d1/d2) X - at/d2
    Mat<RatFunc> am(1, 1);
    am(0, 0) = d1 / d2;
    MatK A(S, am);
    VecK rhs{-at / d2};
    auto sols = rational_solutions_system(A, rhs);
    REQUIRE(sols.particular.has_value());
    // the planted x must lie in the affine solution set; verify residual of x
    RatFunc res = phi(x, *S) - (d1 / d2) * x + at / d2;
    CHECK(res == RatFunc(0));
  }
}

TEST_CASE("system with valuation obstruction is empty") {
  auto tw = Tower::create();
  auto Qf = DiffField::make_qdiff(tw, AlgNum(2));
  // phi(Y) = diag(2z, 4z) Y has no rational solutions
  Mat<RatFunc> a(2, 2);
  a(0, 0) = RatFunc(AlgNum(2)) * RatFunc::z();
  a(1, 1) = RatFunc(AlgNum(4)) * RatFunc::z();
  MatK A(Qf, a);
  auto sols = rational_solutions_system(A);
  CHECK(sols.homogeneous.empty());
}

TEST_CASE("inhomogeneous scalar solve") {
  auto tw = Tower::create();
  auto S = DiffField::make_shift(tw, AlgNum(1));
  RatFunc z = RatFunc::z();
  // phi(y) - y = 1 has solution y = z (h = 1)
  OreOp L = scalar_op(S, {RatFunc(-1), RatFunc(1)});
  auto sols = rational_solutions_scalar_inhom(L, RatFunc(1));
  REQUIRE(sols.particular.has_value());
  CHECK(L.apply(*sols.particular) == RatFunc(1));
  CHECK(sols.homogeneous.size() == 1);  // constants
}
