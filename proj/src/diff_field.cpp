#include <diffgal/diff_field.hpp>

#include <algorithm>

namespace diffgal {

std::shared_ptr<DiffField> DiffField::make_shift(std::shared_ptr<Tower> tower, AlgNum h,
                                                 int ramification) {
  if (is_zero(h)) throw math_error("Case S requires h != 0");
  if (ramification != 1)
    throw math_error("ramification is only meaningful for the q-difference case");
  auto f = std::shared_ptr<DiffField>(new DiffField());
  f->kind_ = CaseKind::S;
  f->param_ = std::move(h);
  f->ram_ = 1;
  f->tower_ = std::move(tower);
  return f;
}

std::shared_ptr<DiffField> DiffField::make_qdiff(std::shared_ptr<Tower> tower, AlgNum q,
                                                 int ramification) {
  if (is_zero(q)) throw math_error("Case Q requires q != 0");
  if (is_root_of_unity(q)) throw math_error("Case Q requires q not a root of unity");
  if (ramification < 1) throw math_error("ramification must be >= 1");
  auto f = std::shared_ptr<DiffField>(new DiffField());
  f->kind_ = CaseKind::Q;
  f->param_ = std::move(q);
  f->ram_ = ramification;
  f->tower_ = std::move(tower);
  return f;
}

std::shared_ptr<DiffField> DiffField::iterated(int n) const {
  if (n < 1) throw math_error("iterated difference field needs n >= 1");
  auto f = std::shared_ptr<DiffField>(new DiffField());
  f->kind_ = kind_;
  f->param_ = kind_ == CaseKind::S ? AlgNum(n) * param_ : param_.pow(n);
  f->ram_ = ram_;
  f->tower_ = tower_;
  return f;
}

APoly phi_poly(const APoly& p, const DiffField& fld, long power) {
  if (power == 0 || p.constant()) return p;
  if (fld.kind() == CaseKind::S) {
    APoly shift;
    shift.set_coeff(1, AlgNum(1));
    shift.set_coeff(0, AlgNum(power) * fld.param());
    return p.compose(shift);
  }
  AlgNum qp = fld.param().pow(power);
  APoly r;
  AlgNum scale(1);
  for (int i = 0; i <= p.degree(); ++i) {
    r.set_coeff(i, p[i] * scale);
    scale = scale * qp;
  }
  return r;
}

RatFunc phi(const RatFunc& f, const DiffField& fld, long power) {
  return RatFunc(phi_poly(f.num(), fld, power), phi_poly(f.den(), fld, power));
}

RatFunc derive(const RatFunc& f, const DiffField& fld) {
  RatFunc dz = RatFunc(f.num().derivative() * f.den() - f.num() * f.den().derivative(),
                       f.den() * f.den());
  if (fld.kind() == CaseKind::Q) dz = RatFunc::z() * dz;
  return dz;
}

namespace {

long qq_valuation(const QQ& x, const ZZ& p) {
  if (is_zero(x)) throw math_error("valuation of zero");
  long v = 0;
  ZZ n = x.get_num();
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  ZZ d = x.get_den();
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

// smallest prime with nonzero valuation in x; nullopt when x = +-1
std::optional<ZZ> prime_with_valuation(const QQ& x) {
  ZZ m = abs(x.get_num()) * x.get_den();
  if (m == 1) return std::nullopt;
  for (ZZ p = 2; p * p <= m; p += (p == 2 ? 1 : 2))
    if (m % p == 0) return p;
  return m;
}

std::optional<long> dlog_verify(const AlgNum& a, const AlgNum& q, long j) {
  if (a == q.pow(j)) return j;
  return std::nullopt;
}

constexpr long kDlogWindow = 64;

}  // namespace

std::optional<long> discrete_log(const AlgNum& a, const AlgNum& q) {
  if (is_zero(a) || is_zero(q)) return std::nullopt;
  if (a == AlgNum(1)) return 0;
  if (q == AlgNum(1)) return std::nullopt;
  if (q == AlgNum(-1)) return a == AlgNum(-1) ? std::optional<long>(1) : std::nullopt;
  if (a.is_rational() && q.is_rational()) {
    auto p = prime_with_valuation(q.rational());
    if (p) {
      long vq = qq_valuation(q.rational(), *p);
      long va = qq_valuation(a.rational(), *p);
      if (va % vq != 0) return std::nullopt;
      return dlog_verify(a, q, va / vq);
    }
    // |q| == 1, q != +-1 cannot happen for rationals
    return std::nullopt;
  }
  QQ na = norm_full(a), nq = norm_full(q);
  auto p = prime_with_valuation(nq);
  if (p) {
    long vq = qq_valuation(nq, *p);
    long va = qq_valuation(na, *p);
    if (va % vq != 0) return std::nullopt;
    return dlog_verify(a, q, va / vq);
  }
  // algebraic unit base: bounded window search
  for (long j = 0; j <= kDlogWindow; ++j) {
    if (a == q.pow(j)) return j;
    if (j > 0 && a == q.pow(-j)) return -j;
  }
  return std::nullopt;
}

std::optional<std::pair<long, long>> torsion_shift(const AlgNum& a, const AlgNum& q) {
  if (is_zero(a) || is_zero(q)) return std::nullopt;
  if (auto ord = is_root_of_unity(a)) return std::make_pair(0L, *ord);
  auto check = [&](long k) -> std::optional<std::pair<long, long>> {
    if (auto ord = is_root_of_unity(a * q.pow(k))) return std::make_pair(k, *ord);
    return std::nullopt;
  };
  if (a.is_rational() && q.is_rational()) {
    auto p = prime_with_valuation(q.rational());
    if (!p) return std::nullopt;
    long vq = qq_valuation(q.rational(), *p);
    long va = qq_valuation(a.rational(), *p);
    if (va % vq != 0) return std::nullopt;
    return check(-va / vq);
  }
  QQ na = norm_full(a), nq = norm_full(q);
  auto p = prime_with_valuation(nq);
  if (p) {
    long vq = qq_valuation(nq, *p);
    long va = qq_valuation(na, *p);
    if (va % vq != 0) return std::nullopt;
    return check(-va / vq);
  }
  for (long k = 0; k <= kDlogWindow; ++k) {
    if (auto r = check(k)) return r;
    if (k > 0)
      if (auto r = check(-k)) return r;
  }
  return std::nullopt;
}

namespace {

// distinct monic irreducible factors, z excluded in Case Q (z is
// phi-invariant there and would collide at every distance)
std::vector<APoly> collision_factors(const APoly& p, const DiffField& fld) {
  std::vector<APoly> out;
  for (auto& [f, mult] : factor_tower(p, fld.tower().get())) {
    if (fld.kind() == CaseKind::Q && f == APoly::x()) continue;
    out.push_back(f);
  }
  return out;
}

std::optional<long> factor_shift_distance(const APoly& f, const APoly& g,
                                          const DiffField& fld) {
  // j with f = phi^j(g) after monic normalization
  int e = f.degree();
  if (g.degree() != e) return std::nullopt;
  if (fld.kind() == CaseKind::S) {
    // compare z^{e-1} coefficients: f_{e-1} = g_{e-1} + e*j*h
    AlgNum diff = (f[e - 1] - g[e - 1]) / (AlgNum(e) * fld.param());
    if (!diff.is_integer_value()) return std::nullopt;
    long j = to_long(diff.rational());
    if (phi_poly(g, fld, j).monic() == f) return j;
    return std::nullopt;
  }
  // Case Q: q^{j e} = g(0)/f(0)
  AlgNum f0 = f[0], g0 = g[0];
  if (is_zero(f0) || is_zero(g0)) return std::nullopt;
  auto je = discrete_log(g0 / f0, fld.param());
  if (!je || *je % e != 0) return std::nullopt;
  long j = *je / e;
  if (phi_poly(g, fld, j).monic() == f) return j;
  return std::nullopt;
}

}  // namespace

std::vector<long> signed_dispersion(const APoly& p, const APoly& r, const DiffField& fld) {
  if (p.zero() || r.zero()) throw math_error("dispersion of zero polynomial");
  std::vector<long> out;
  auto pf = collision_factors(p, fld);
  auto rf = collision_factors(r, fld);
  for (auto& f : pf)
    for (auto& g : rf)
      if (auto j = factor_shift_distance(f, g, fld))
        if (std::find(out.begin(), out.end(), *j) == out.end()) out.push_back(*j);
  std::sort(out.begin(), out.end());
  return out;
}

std::set<long> dispersion(const APoly& p, const APoly& r, const DiffField& fld) {
  std::set<long> out;
  for (long j : signed_dispersion(p, r, fld)) out.insert(j < 0 ? -j : j);
  return out;
}

}  // namespace diffgal
