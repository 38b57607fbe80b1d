#include <diffgal/zfactor.hpp>

#include <algorithm>
#include <array>
#include <map>

namespace diffgal {

namespace {

using ZPoly = Poly<ZZ>;

// ----- arithmetic in Fp[x], p a word-size odd prime -----

struct Fp {
  long p;
  long add(long a, long b) const { return (a + b) % p; }
  long sub(long a, long b) const { return ((a - b) % p + p) % p; }
  long mul(long a, long b) const {
    return static_cast<long>((static_cast<__int128>(a) * b) % p);
  }
  long inv(long a) const {
    long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
      long q = r / nr;
      std::swap(t -= q * nt, nt);
      std::swap(r -= q * nr, nr);
    }
    return (t % p + p) % p;
  }
};

using PPoly = std::vector<long>;  // dense, c[i] = coeff of x^i, trimmed

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int pdeg(const PPoly& a) { return static_cast<int>(a.size()) - 1; }

PPoly pmul(const Fp& F, const PPoly& a, const PPoly& b) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  ptrim(r);
  return r;
}

PPoly psub(const Fp& F, PPoly a, const PPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  ptrim(a);
  return a;
}

void pdivrem(const Fp& F, PPoly a, const PPoly& b, PPoly& q, PPoly& r) {
  q.assign(a.size(), 0);
  long linv = F.inv(b.back());
  while (pdeg(a) >= pdeg(b)) {
    int d = pdeg(a) - pdeg(b);
    long c = F.mul(a.back(), linv);
    q[d] = F.add(q[d], c);
    for (size_t i = 0; i < b.size(); ++i) a[i + d] = F.sub(a[i + d], F.mul(c, b[i]));
    ptrim(a);
  }
  ptrim(q);
  r = a;
}

PPoly pmod(const Fp& F, const PPoly& a, const PPoly& b) {
  PPoly q, r;
  pdivrem(F, a, b, q, r);
  return r;
}

PPoly pmonic(const Fp& F, PPoly a) {
  if (a.empty()) return a;
  long inv = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, inv);
  return a;
}

PPoly pgcd(const Fp& F, PPoly a, PPoly b) {
  while (!b.empty()) {
    PPoly r = pmod(F, a, b);
    a = b;
    b = r;
  }
  return pmonic(F, a);
}

PPoly pderiv(const Fp& F, const PPoly& a) {
  PPoly r;
  for (int i = 1; i <= pdeg(a); ++i) r.push_back(F.mul(a[i], i % F.p));
  ptrim(r);
  return r;
}

PPoly ppowmod(const Fp& F, PPoly base, ZZ e, const PPoly& mod) {
  PPoly r{1};
  base = pmod(F, base, mod);
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = pmod(F, pmul(F, r, base), mod);
    base = pmod(F, pmul(F, base, base), mod);
    e >>= 1;
  }
  return r;
}

// deterministic small rng for equal-degree splitting
struct Lcg {
  uint64_t s = 0x9e3779b97f4a7c15ull;
  uint64_t next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return s >> 11;
  }
};

// Cantor-Zassenhaus factorization of a squarefree monic polynomial mod p.
std::vector<PPoly> factor_fp_squarefree(const Fp& F, const PPoly& f) {
  std::vector<PPoly> out;
  // distinct-degree
  std::vector<std::pair<PPoly, int>> dd;
  PPoly rem = f;
  PPoly h{0, 1};  // x
  for (int d = 1; 2 * d <= pdeg(rem); ++d) {
    h = ppowmod(F, h, ZZ(F.p), rem);  // x^(p^d) mod rem, iterated
    PPoly hx = psub(F, h, PPoly{0, 1});
    PPoly g = pgcd(F, rem, hx);
    if (pdeg(g) > 0) {
      dd.emplace_back(g, d);
      PPoly q, r;
      pdivrem(F, rem, g, q, r);
      rem = q;
      h = pmod(F, h, rem);
    }
  }
  if (pdeg(rem) > 0) dd.emplace_back(rem, pdeg(rem));
  // equal-degree
  Lcg rng;
  for (auto& [g, d] : dd) {
    std::vector<PPoly> stack{g};
    while (!stack.empty()) {
      PPoly cur = stack.back();
      stack.pop_back();
      if (pdeg(cur) == d) {
        out.push_back(pmonic(F, cur));
        continue;
      }
      // random splitting with t^((p^d-1)/2) - 1
      ZZ e = 1;
      for (int i = 0; i < d; ++i) e *= F.p;
      e = (e - 1) / 2;
      while (true) {
        PPoly t(static_cast<size_t>(pdeg(cur)), 0);
        for (auto& c : t) c = static_cast<long>(rng.next() % static_cast<uint64_t>(F.p));
        ptrim(t);
        if (t.empty()) continue;
        PPoly w = ppowmod(F, t, e, cur);
        if (w.empty()) continue;
        w[0] = F.sub(w[0], 1);
        ptrim(w);
        PPoly g2 = pgcd(F, cur, w);
        if (pdeg(g2) > 0 && pdeg(g2) < pdeg(cur)) {
          PPoly q, r;
          pdivrem(F, cur, g2, q, r);
          stack.push_back(g2);
          stack.push_back(q);
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ----- lifting and recombination over Z -----

ZZ zcontent(const ZPoly& f) {
  ZZ g = 0;
  for (auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZZ symmetric_mod(const ZZ& a, const ZZ& m) {
  ZZ r = a % m;
  if (sgn(r) < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

ZPoly zmod_sym(const ZPoly& f, const ZZ& m) {
  ZPoly r;
  for (int i = 0; i <= f.degree(); ++i) r.set_coeff(i, symmetric_mod(f[i], m));
  return r;
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const ZZ& m) { return zmod_sym(a * b, m); }

// division in (Z/m)[x]; lc of the divisor must be invertible mod m
void zdivrem_mod(const ZPoly& a, const ZPoly& b, const ZZ& m, ZPoly& q, ZPoly& r) {
  ZZ lcinv;
  ZZ lc = b.lc() % m;
  if (sgn(lc) < 0) lc += m;
  if (mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), m.get_mpz_t()) == 0)
    throw math_error("mod division: divisor lc not invertible");
  q = ZPoly();
  r = zmod_sym(a, m);
  while (!r.zero() && r.degree() >= b.degree()) {
    int d = r.degree() - b.degree();
    ZZ c = symmetric_mod(r[r.degree()] * lcinv, m);
    q.set_coeff(d, c);
    ZPoly sub = ZPoly::monomial(c, d) * b;
    r = zmod_sym(r - sub, m);
    if (r.degree() >= b.degree() + d)
      r.set_coeff(b.degree() + d, ZZ(0));
  }
  q = zmod_sym(q, m);
}

// Hensel step: from f ≡ g*h, s*g + t*h ≡ 1 (mod m) with g monic, produce the
// same data mod m^2.  Derivation: with e := f - g*h and t*e = q*g + r,
//   g*(s*e + q*h) + h*r ≡ e (mod m^2),
// so g1 := g + r (still monic) and h1 := h + s*e + q*h.
struct HenselPair {
  ZPoly g, h, s, t;
};

void hensel_step(const ZPoly& f, HenselPair& P, const ZZ& m) {
  ZZ m2 = m * m;
  ZPoly e = zmod_sym(f - P.g * P.h, m2);
  ZPoly q, r;
  zdivrem_mod(zmul_mod(P.t, e, m2), P.g, m2, q, r);
  ZPoly g1 = zmod_sym(P.g + r, m2);
  ZPoly h1 = zmod_sym(P.h + P.s * e + q * P.h, m2);
  // refresh the Bezout pair: with b := s*g1 + t*h1 - 1 and t*b = q2*g1 + r2,
  // (s - (s*b + q2*h1))*g1 + (t - r2)*h1 ≡ 1 (mod m^2)
  ZPoly b = zmod_sym(P.s * g1 + P.t * h1 - ZPoly(ZZ(1)), m2);
  ZPoly q2, r2;
  zdivrem_mod(zmul_mod(P.t, b, m2), g1, m2, q2, r2);
  ZPoly s1 = zmod_sym(P.s - P.s * b - q2 * h1, m2);
  ZPoly t1 = zmod_sym(P.t - r2, m2);
  // canonical reduction keeps degrees small: s1 := s1 rem h1 and t1 adjusted
  // so that s1*g1 + t1*h1 = 1 exactly mod m^2
  ZPoly qs, rs;
  zdivrem_mod(s1, h1, m2, qs, rs);
  s1 = rs;
  ZPoly num = zmod_sym(ZPoly(ZZ(1)) - s1 * g1, m2);
  ZPoly t1q, t1r;
  zdivrem_mod(num, h1, m2, t1q, t1r);
  if (!t1r.zero()) throw math_error("hensel bezout refresh failed");
  t1 = t1q;
  P = {g1, h1, s1, t1};
}

ZPoly to_zpoly_sym(const Fp& F, const PPoly& a) {
  ZPoly r;
  for (int i = 0; i <= pdeg(a); ++i) {
    long c = a[i];
    if (c > F.p / 2) c -= F.p;
    r.set_coeff(i, ZZ(c));
  }
  return r;
}

PPoly to_ppoly(const Fp& F, const ZPoly& a) {
  PPoly r(static_cast<size_t>(a.degree() + 1), 0);
  for (int i = 0; i <= a.degree(); ++i) {
    ZZ c = a[i] % F.p;
    if (sgn(c) < 0) c += F.p;
    r[static_cast<size_t>(i)] = c.get_si();
  }
  ptrim(r);
  return r;
}

// Lift the factorization f ≡ lc(f) * prod(fl) (mod p) to modulus >= bound,
// divide-and-conquer over the factor list.
std::vector<ZPoly> hensel_lift_list(const ZPoly& f, std::vector<PPoly> fl, const Fp& F,
                                    const ZZ& bound) {
  if (fl.size() == 1) {
    // the polynomial itself, normalized below by caller
    return {f};
  }
  size_t half = fl.size() / 2;
  std::vector<PPoly> left(fl.begin(), fl.begin() + half);
  std::vector<PPoly> right(fl.begin() + half, fl.end());
  PPoly gp{1}, hp{1};
  for (auto& u : left) gp = pmul(F, gp, u);
  for (auto& u : right) hp = pmul(F, hp, u);
  // make product lc(f)*g*h ≡ f: fold lc into h
  ZZ lcf = f.lc() % F.p;
  if (sgn(lcf) < 0) lcf += F.p;
  long lc = lcf.get_si();
  for (auto& c : hp) c = F.mul(c, lc);
  // bezout: s*g + t*h = 1 mod p
  PPoly s, t;
  {
    // extended euclid in Fp[x]
    PPoly r0 = gp, r1 = hp, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      PPoly q, r;
      pdivrem(F, r0, r1, q, r);
      r0 = r1;
      r1 = r;
      PPoly s2 = psub(F, s0, pmul(F, q, s1));
      PPoly t2 = psub(F, t0, pmul(F, q, t1));
      s0 = s1;
      s1 = s2;
      t0 = t1;
      t1 = t2;
    }
    long inv = F.inv(r0.empty() ? 1 : r0[0]);
    for (auto& c : s0) c = F.mul(c, inv);
    for (auto& c : t0) c = F.mul(c, inv);
    s = s0;
    t = t0;
  }
  HenselPair P{to_zpoly_sym(F, gp), to_zpoly_sym(F, hp), to_zpoly_sym(F, s),
               to_zpoly_sym(F, t)};
  // g must stay monic through lifting: normalize g monic mod p (it is: product
  // of monic factors).
  ZZ m = F.p;
  while (m < bound) {
    hensel_step(f, P, m);
    m = m * m;
  }
  // recurse: P.g is monic; P.h carries lc(f)
  std::vector<ZPoly> out;
  auto lift_left = hensel_lift_list(P.g, left, F, bound);
  auto lift_right = hensel_lift_list(P.h, right, F, bound);
  out.insert(out.end(), lift_left.begin(), lift_left.end());
  out.insert(out.end(), lift_right.begin(), lift_right.end());
  return out;
}

ZZ norm1(const ZPoly& f) {
  ZZ s = 0;
  for (auto& c : f.coeffs()) s += abs(c);
  return s;
}

// Factor a primitive squarefree integer polynomial into irreducible integer
// polynomials (Zassenhaus).
std::vector<ZPoly> factor_z_squarefree(const ZPoly& f0) {
  ZPoly f = f0;
  if (f.degree() <= 1) return {f};
  // choose a prime with squarefree image and nonvanishing lc
  static const std::array<long, 25> primes = {3,   5,   7,   11,  13,  17,  19,  23, 29,
                                              31,  37,  41,  43,  47,  53,  59,  61, 67,
                                              71,  73,  79,  83,  89,  97,  101};
  Fp F{0};
  PPoly fp;
  bool found = false;
  for (long p : primes) {
    if (f.lc() % p == 0) continue;
    F.p = p;
    fp = to_ppoly(F, f);
    PPoly g = pgcd(F, fp, pderiv(F, fp));
    if (pdeg(g) == 0) {
      found = true;
      break;
    }
  }
  if (!found) throw math_error("no suitable small prime for factorization");
  std::vector<PPoly> modular = factor_fp_squarefree(F, pmonic(F, fp));
  if (modular.size() == 1) return {f};
  // Mignotte-style bound on coefficients of any factor times lc
  ZZ bound = abs(f.lc()) * norm1(f);
  ZZ two_d = 1;
  two_d <<= (f.degree() + 1);
  bound *= two_d;
  bound = 2 * bound + 1;
  ZZ modulus = F.p;
  while (modulus < bound) modulus *= modulus;
  std::vector<ZPoly> lifted = hensel_lift_list(zmod_sym(f, modulus), modular, F, bound);
  // normalize: all monic mod modulus except possibly carried lc; remap to monic
  for (auto& g : lifted) {
    ZZ inv;
    ZZ l = g.lc() % modulus;
    if (sgn(l) < 0) l += modulus;
    if (l != 1) {
      if (mpz_invert(inv.get_mpz_t(), l.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw math_error("hensel leading coefficient not invertible");
      ZPoly h;
      for (int i = 0; i <= g.degree(); ++i) h.set_coeff(i, symmetric_mod(g[i] * inv, modulus));
      g = h;
    } else {
      g = zmod_sym(g, modulus);
    }
  }
  // subset recombination
  std::vector<ZPoly> out;
  std::vector<bool> used(lifted.size(), false);
  ZPoly rem = f;
  size_t n = lifted.size();
  for (size_t card = 1; card <= n; ++card) {
    // iterate subsets of given cardinality over unused indices
    std::vector<size_t> avail;
    for (size_t i = 0; i < n; ++i)
      if (!used[i]) avail.push_back(i);
    if (avail.size() < card) continue;
    std::vector<size_t> idx(card);
    std::function<bool(size_t, size_t)> rec = [&](size_t pos, size_t start) -> bool {
      if (pos == card) {
        ZPoly cand(ZZ(rem.lc()));
        for (size_t k : idx) cand = zmod_sym(cand * lifted[k], modulus);
        // primitive part
        ZZ ct = zcontent(cand);
        ZPoly prim;
        for (int i = 0; i <= cand.degree(); ++i) prim.set_coeff(i, cand[i] / ct);
        // trial division over Q
        QPoly qrem = rem.map<QQ>([](const ZZ& c) { return QQ(c); });
        QPoly qcand = prim.map<QQ>([](const ZZ& c) { return QQ(c); });
        QPoly qq, rr;
        QPoly::divrem(qrem, qcand, qq, rr);
        if (!rr.zero()) return false;
        out.push_back(prim);
        for (size_t k : idx) used[k] = true;
        // rem := rem / cand over Z
        ZPoly newrem;
        for (int i = 0; i <= qq.degree(); ++i) {
          QQ c = qq[i];
          if (!is_integer(c)) {
            // scale: divide by content sign only; should not happen for
            // primitive inputs
            newrem = ZPoly();
            break;
          }
          newrem.set_coeff(i, ZZ(c.get_num()));
        }
        rem = newrem.zero() ? rem : newrem;
        return true;
      }
      for (size_t s = start; s < avail.size(); ++s) {
        if (used[avail[s]]) continue;
        idx[pos] = avail[s];
        if (rec(pos + 1, s + 1)) return true;
      }
      return false;
    };
    while (rec(0, 0)) {
      // refresh available list after success
      avail.clear();
      for (size_t i = 0; i < n; ++i)
        if (!used[i]) avail.push_back(i);
      if (avail.size() < card) break;
    }
  }
  if (rem.degree() > 0) out.push_back(rem);
  std::sort(out.begin(), out.end(), [](const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  return out;
}

ZPoly to_primitive_z(const QPoly& f, QQ* scale = nullptr) {
  ZZ den = 1;
  for (auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z;
  for (int i = 0; i <= f.degree(); ++i) {
    QQ c = f[i] * QQ(den);
    z.set_coeff(i, ZZ(c.get_num()));
  }
  ZZ ct = zcontent(z);
  if (sgn(z.lc()) < 0) ct = -ct;
  ZPoly prim;
  for (int i = 0; i <= z.degree(); ++i) prim.set_coeff(i, z[i] / ct);
  if (scale) {
    QQ sc(ct, den);
    sc.canonicalize();
    *scale = sc;
  }
  return prim;
}

}  // namespace

std::vector<QPoly> factor_squarefree_rational(const QPoly& f) {
  if (f.degree() < 1) return {};
  ZPoly prim = to_primitive_z(f);
  std::vector<QPoly> out;
  for (auto& g : factor_z_squarefree(prim)) {
    QPoly q = g.map<QQ>([](const ZZ& c) { return QQ(c); });
    out.push_back(q.monic());
  }
  return out;
}

std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& f) {
  std::vector<std::pair<QPoly, int>> out;
  for (auto& [sf, mult] : squarefree_decomposition(f))
    for (auto& irr : factor_squarefree_rational(sf)) out.emplace_back(irr, mult);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    for (int i = a.first.degree(); i >= 0; --i)
      if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible_rational(const QPoly& f) {
  if (f.degree() < 1) return false;
  auto sf = squarefree_decomposition(f);
  if (sf.size() != 1 || sf[0].second != 1) return false;
  return factor_squarefree_rational(f).size() == 1;
}

std::vector<QQ> rational_roots(const QPoly& f) {
  std::vector<QQ> out;
  for (auto& [g, mult] : factor_rational(f))
    if (g.degree() == 1) out.push_back(-g[0]);
  return out;
}

std::vector<ZZ> integer_roots(const QPoly& f) {
  std::vector<ZZ> out;
  for (auto& q : rational_roots(f))
    if (is_integer(q)) out.push_back(ZZ(q.get_num()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace diffgal
