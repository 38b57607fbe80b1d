#include <diffgal/ratsolve.hpp>

#include <algorithm>

namespace diffgal {

namespace {

// binomial-coefficient polynomials C(m, t) in the symbolic degree m
std::vector<APoly> binomial_polys(int tmax) {
  std::vector<APoly> c{APoly(AlgNum(1))};
  for (int t = 1; t <= tmax; ++t) {
    APoly factor;  // (m - (t-1)) / t
    factor.set_coeff(1, AlgNum(QQ(1, t)));
    factor.set_coeff(0, AlgNum(QQ(-(t - 1), t)));
    c.push_back(c.back() * factor);
  }
  return c;
}

// Case S: nonnegative-degree candidates from the first nonvanishing indicial
// polynomial psi_s(m)
std::vector<long> degree_candidates_shift(const std::vector<APoly>& a, const DiffField& fld) {
  int n = static_cast<int>(a.size()) - 1;
  int b = -1;
  for (auto& p : a) b = std::max(b, p.degree());
  if (b < 0) throw math_error("zero operator");
  auto binom = binomial_polys(b + n + 2);
  for (int s = 0; s <= b + n + 2; ++s) {
    APoly psi;
    for (int t = 0; t <= s; ++t) {
      AlgNum beta(0);
      for (int i = 0; i <= n; ++i) {
        const AlgNum& coeff = a[static_cast<size_t>(i)][b - s + t];
        if (is_zero(coeff)) continue;
        beta = beta + coeff * (AlgNum(i) * fld.param()).pow(t);
      }
      if (!is_zero(beta)) psi = psi + beta * binom[static_cast<size_t>(t)];
    }
    if (psi.zero()) continue;
    std::vector<long> out;
    for (long m : integer_roots_tower(psi, fld.tower().get()))
      if (m >= 0) out.push_back(m);
    std::sort(out.begin(), out.end());
    return out;
  }
  throw math_error("indicial polynomial did not terminate");
}

// Case Q: integers j with chi(q^j) = 0
std::vector<long> q_power_roots(const APoly& chi, const DiffField& fld) {
  std::vector<long> out;
  if (chi.zero()) throw math_error("zero characteristic polynomial");
  if (chi.degree() == 0) return out;
  APoly sf = squarefree_part(chi);
  for (auto& f : factor_squarefree_tower(sf, fld.tower().get())) {
    if (f.degree() != 1) continue;
    AlgNum root = -f[0];
    if (is_zero(root)) continue;
    if (auto j = discrete_log(root, fld.param())) out.push_back(*j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SupportWindow support_window(const std::vector<APoly>& a, const DiffField& fld,
                             bool laurent) {
  int n = static_cast<int>(a.size()) - 1;
  SupportWindow w;
  if (fld.kind() == CaseKind::S) {
    auto cand = degree_candidates_shift(a, fld);
    if (cand.empty()) return w;  // empty
    w.lo = 0;
    w.hi = cand.back();
    return w;
  }
  int b = -1;
  long v = LONG_MAX;
  for (auto& p : a) {
    if (p.zero()) continue;
    b = std::max(b, p.degree());
    v = std::min(v, static_cast<long>(p.valuation()));
  }
  APoly chi_top, chi_low;
  for (int i = 0; i <= n; ++i) {
    chi_top.set_coeff(i, a[static_cast<size_t>(i)][b]);
    chi_low.set_coeff(i, a[static_cast<size_t>(i)][static_cast<int>(v)]);
  }
  auto top = q_power_roots(chi_top, fld);
  auto low = q_power_roots(chi_low, fld);
  if (top.empty() || low.empty()) return w;
  w.lo = low.front();
  w.hi = top.back();
  if (!laurent) w.lo = std::max(w.lo, 0L);
  return w;
}

}  // namespace

std::vector<APoly> polynomial_solutions(const std::vector<APoly>& coeffs,
                                        const DiffField& fld, bool laurent,
                                        long* shift_out) {
  if (shift_out) *shift_out = 0;
  SupportWindow w = support_window(coeffs, fld, laurent && fld.kind() == CaseKind::Q);
  if (w.empty()) return {};
  long width = w.hi - w.lo + 1;
  // apply the operator to each monomial z^k and collect z-coefficients
  int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<APoly> images(static_cast<size_t>(width));
  long min_exp = LONG_MAX, max_exp = LONG_MIN;
  for (long k = w.lo; k <= w.hi; ++k) {
    // sum_i a_i phi^i(z^k); in Case Q phi^i(z^k) = q^{ik} z^k, in Case S
    // (z + ih)^k
    APoly img;
    for (int i = 0; i <= n; ++i) {
      const APoly& ai = coeffs[static_cast<size_t>(i)];
      if (ai.zero()) continue;
      if (fld.kind() == CaseKind::Q) {
        img = img + fld.param().pow(i * k) * ai;  // times z^k, tracked via offset
      } else {
        APoly zk;
        zk.set_coeff(1, AlgNum(1));
        zk.set_coeff(0, AlgNum(i) * fld.param());
        img = img + ai * zk.pow(k);
      }
    }
    images[static_cast<size_t>(k - w.lo)] = img;
    if (!img.zero()) {
      long off = fld.kind() == CaseKind::Q ? k : 0;
      min_exp = std::min(min_exp, img.valuation() + off);
      max_exp = std::max(max_exp, img.degree() + off);
    }
  }
  if (min_exp > max_exp) {
    // operator kills every monomial in the window: whole window solves
    std::vector<APoly> basis;
    for (long k = w.lo; k <= w.hi; ++k)
      basis.push_back(APoly::monomial(AlgNum(1), static_cast<int>(k - w.lo)));
    if (shift_out) *shift_out = w.lo;
    return basis;
  }
  Mat<AlgNum> sys(static_cast<int>(max_exp - min_exp + 1), static_cast<int>(width));
  for (long k = w.lo; k <= w.hi; ++k) {
    const APoly& img = images[static_cast<size_t>(k - w.lo)];
    long off = fld.kind() == CaseKind::Q ? k : 0;
    for (int e = 0; e <= img.degree(); ++e) {
      if (is_zero(img[e])) continue;
      sys(static_cast<int>(e + off - min_exp), static_cast<int>(k - w.lo)) = img[e];
    }
  }
  auto null_basis = nullspace(sys);
  std::vector<APoly> out;
  for (auto& v : null_basis) {
    APoly p;
    for (size_t i = 0; i < v.size(); ++i) p.set_coeff(static_cast<int>(i), v[i]);
    if (!p.zero()) out.push_back(p);
  }
  if (shift_out) *shift_out = w.lo;
  return out;
}

APoly universal_denominator(const std::vector<APoly>& coeffs, const DiffField& fld) {
  int n = static_cast<int>(coeffs.size()) - 1;
  APoly A = coeffs[0];
  APoly B = phi_poly(coeffs[static_cast<size_t>(n)], fld, -n);
  if (fld.kind() == CaseKind::Q) {
    // z-power poles are handled by the Laurent window
    while (!A.zero() && is_zero(A[0])) A = A / APoly::x();
    while (!B.zero() && is_zero(B[0])) B = B / APoly::x();
  }
  APoly u(AlgNum(1));
  if (A.degree() < 1 || B.degree() < 1) return u;
  // chain tops are roots of A, bottoms are roots of B at distance j >= 0
  std::vector<long> J;
  for (long j0 : signed_dispersion(A, B, fld))
    if (j0 <= 0) J.push_back(-j0);
  std::sort(J.begin(), J.end(), std::greater<long>());
  for (long j : J) {
    APoly d = APoly::gcd(A, phi_poly(B, fld, -j));
    if (d.degree() < 1) continue;
    A = A / d;
    B = B / phi_poly(d, fld, j);
    for (long i = 0; i <= j; ++i) u = u * phi_poly(d, fld, i);
  }
  return u;
}

namespace {

std::vector<APoly> cleared_coeffs(const OreOp& L) {
  std::vector<RatFunc> rc = L.equation_coeffs();
  std::vector<APoly> out;
  for (auto& c : rc) {
    if (!c.is_polynomial()) throw math_error("equation coefficients not cleared");
    out.push_back(c.num());
  }
  return out;
}

}  // namespace

SolutionSpace rational_solutions_scalar(const OreOp& L) {
  const DiffField& fld = *L.field();
  std::vector<APoly> a = cleared_coeffs(L);
  int n = static_cast<int>(a.size()) - 1;
  if (n < 1) return {};
  if (a[0].zero() || a[static_cast<size_t>(n)].zero())
    throw math_error("rational_solutions_scalar needs a0 * an != 0");
  APoly u = universal_denominator(a, fld);
  // substitute y = x / u and clear: b_i = a_i * (U / phi^i(u))
  std::vector<APoly> b(a.size());
  APoly U(AlgNum(1));
  std::vector<APoly> shifted(a.size());
  for (int i = 0; i <= n; ++i) {
    shifted[static_cast<size_t>(i)] = phi_poly(u, fld, i);
    U = U * shifted[static_cast<size_t>(i)];
  }
  for (int i = 0; i <= n; ++i)
    b[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] * (U / shifted[static_cast<size_t>(i)]);
  long shift = 0;
  std::vector<APoly> xs = polynomial_solutions(b, fld, true, &shift);
  SolutionSpace out;
  RatFunc uf(u);
  for (auto& x : xs) {
    RatFunc y = RatFunc(x) * RatFunc::z().pow(shift) / uf;
    if (!(L.apply(y) == RatFunc(0)))
      throw math_error("internal: rational solution failed verification");
    out.basis.push_back(VecK{y});
  }
  return out;
}

ScalarSolutions rational_solutions_scalar_inhom(const OreOp& L, const RatFunc& g) {
  ScalarSolutions out;
  if (g.zero()) {
    for (auto& v : rational_solutions_scalar(L).basis) out.homogeneous.push_back(v[0]);
    out.particular = RatFunc(0);
    return out;
  }
  const FieldPtr& fld = L.field();
  // annihilate g: (phi - phi(g)/g) g = 0, then solve the order-(n+1)
  // homogeneous equation and cut by the constant multiplier
  std::map<long, RatFunc> mc;
  mc[1] = RatFunc(1);
  mc[0] = -phi(g, *fld) / g;
  OreOp M(fld, mc);
  SolutionSpace big = rational_solutions_scalar(M * L);
  std::vector<RatFunc> ys;
  std::vector<AlgNum> cs;
  for (auto& v : big.basis) {
    RatFunc w = L.apply(v[0]);
    RatFunc ratio = w / g;
    if (!ratio.is_constant())
      throw math_error("internal: inhomogeneous multiplier is not constant");
    ys.push_back(v[0]);
    cs.push_back(ratio.constant_value());
  }
  // homogeneous combos: kernel of the functional c
  Mat<AlgNum> row(1, static_cast<int>(cs.size()));
  for (size_t j = 0; j < cs.size(); ++j) row(0, static_cast<int>(j)) = cs[j];
  for (auto& combo : nullspace(row)) {
    RatFunc y(0);
    for (size_t j = 0; j < cs.size(); ++j) y += RatFunc(combo[j]) * ys[j];
    if (!y.zero()) out.homogeneous.push_back(y);
  }
  for (size_t j = 0; j < cs.size(); ++j) {
    if (!is_zero(cs[j])) {
      out.particular = RatFunc(cs[j].inverse()) * ys[j];
      break;
    }
  }
  return out;
}

SolutionSpace SystemSolutions::solution_space() const {
  SolutionSpace s;
  if (particular) {
    s.basis.push_back(*particular);
    for (auto& h : homogeneous) {
      VecK v = *particular;
      for (size_t i = 0; i < v.size(); ++i) v[i] += h[i];
      s.basis.push_back(v);
    }
  } else {
    s.basis = homogeneous;
  }
  return s;
}

SystemSolutions rational_solutions_system(const MatK& A, const VecK& rhs) {
  const DiffField& fld = *A.field();
  int n = A.size();
  bool inhom = !rhs.empty();
  // per-component candidate spaces from covector recurrences
  std::vector<std::vector<RatFunc>> comp_basis(static_cast<size_t>(n));
  std::vector<RatFunc> comp_part(static_cast<size_t>(n), RatFunc(0));
  for (int i = 0; i < n; ++i) {
    VecK e(static_cast<size_t>(n), RatFunc(0));
    e[static_cast<size_t>(i)] = RatFunc(1);
    CovectorRecurrence rec = covector_recurrence(A, e, rhs);
    ScalarSolutions si = rational_solutions_scalar_inhom(rec.op, rec.g);
    if (inhom && !si.particular) return SystemSolutions{};  // component obstruction
    comp_basis[static_cast<size_t>(i)] = si.homogeneous;
    if (inhom) comp_part[static_cast<size_t>(i)] = *si.particular;
  }
  // unknowns: per-component coefficients (+ delta for the inhomogeneous part)
  int nun = 0;
  std::vector<std::pair<int, int>> index;  // (component, basis idx)
  for (int i = 0; i < n; ++i)
    for (size_t j = 0; j < comp_basis[static_cast<size_t>(i)].size(); ++j)
      index.emplace_back(i, static_cast<int>(j)), ++nun;
  int delta_col = inhom ? nun : -1;
  int cols = nun + (inhom ? 1 : 0);
  if (cols == 0) return SystemSolutions{};
  // residual of row r as a linear RatFunc combination of unknowns
  std::vector<std::vector<RatFunc>> rescoef(static_cast<size_t>(n),
                                            std::vector<RatFunc>(static_cast<size_t>(cols), RatFunc(0)));
  for (int u = 0; u < nun; ++u) {
    auto [i, j] = index[static_cast<size_t>(u)];
    const RatFunc& h = comp_basis[static_cast<size_t>(i)][static_cast<size_t>(j)];
    // contribution of y_i += h to phi(Y) - A Y
    for (int r = 0; r < n; ++r) {
      RatFunc c = -A(r, i) * h;
      if (r == i) c += phi(h, fld);
      rescoef[static_cast<size_t>(r)][static_cast<size_t>(u)] += c;
    }
  }
  if (inhom) {
    for (int r = 0; r < n; ++r) {
      RatFunc c = -rhs[static_cast<size_t>(r)];
      for (int i = 0; i < n; ++i) {
        const RatFunc& p = comp_part[static_cast<size_t>(i)];
        RatFunc cc = -A(r, i) * p;
        if (r == i) cc += phi(p, fld);
        c += cc;
      }
      rescoef[static_cast<size_t>(r)][static_cast<size_t>(delta_col)] = c;
    }
  }
  // expand each residual row over the monomial basis of its numerator
  std::vector<std::vector<AlgNum>> rows;
  for (int r = 0; r < n; ++r) {
    APoly den(AlgNum(1));
    for (auto& c : rescoef[static_cast<size_t>(r)])
      den = den * (c.den() / APoly::gcd(den, c.den()));
    std::vector<APoly> nums;
    int maxdeg = -1;
    for (auto& c : rescoef[static_cast<size_t>(r)]) {
      APoly nm = c.num() * (den / c.den());
      maxdeg = std::max(maxdeg, nm.degree());
      nums.push_back(nm);
    }
    for (int e = 0; e <= maxdeg; ++e) {
      std::vector<AlgNum> row(static_cast<size_t>(cols), AlgNum(0));
      bool nonzero = false;
      for (int u = 0; u < cols; ++u) {
        row[static_cast<size_t>(u)] = nums[static_cast<size_t>(u)][e];
        nonzero = nonzero || !is_zero(row[static_cast<size_t>(u)]);
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  Mat<AlgNum> sys(static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols; ++c) sys(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
  auto kernel = rows.empty() ? [&] {
    std::vector<std::vector<AlgNum>> id;
    for (int c = 0; c < cols; ++c) {
      std::vector<AlgNum> v(static_cast<size_t>(cols), AlgNum(0));
      v[static_cast<size_t>(c)] = AlgNum(1);
      id.push_back(v);
    }
    return id;
  }() : nullspace(sys);
  auto build = [&](const std::vector<AlgNum>& combo, bool with_part) {
    VecK Y(static_cast<size_t>(n), RatFunc(0));
    for (int u = 0; u < nun; ++u) {
      auto [i, j] = index[static_cast<size_t>(u)];
      Y[static_cast<size_t>(i)] +=
          RatFunc(combo[static_cast<size_t>(u)]) * comp_basis[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    if (with_part)
      for (int i = 0; i < n; ++i) Y[static_cast<size_t>(i)] += comp_part[static_cast<size_t>(i)];
    return Y;
  };
  SystemSolutions out;
  std::optional<std::vector<AlgNum>> part_combo;
  for (auto& combo : kernel) {
    if (inhom && !is_zero(combo[static_cast<size_t>(delta_col)])) {
      if (!part_combo) {
        // scale delta to 1
        AlgNum inv = combo[static_cast<size_t>(delta_col)].inverse();
        std::vector<AlgNum> scaled = combo;
        for (auto& c : scaled) c = c * inv;
        part_combo = scaled;
      } else {
        // fold into homogeneous: combo - delta * part_combo
        std::vector<AlgNum> hom = combo;
        for (size_t c = 0; c < hom.size(); ++c)
          hom[c] = hom[c] - combo[static_cast<size_t>(delta_col)] * (*part_combo)[c];
        VecK Y = build(hom, false);
        bool nz = false;
        for (auto& y : Y) nz = nz || !y.zero();
        if (nz) out.homogeneous.push_back(Y);
      }
      continue;
    }
    VecK Y = build(combo, false);
    bool nz = false;
    for (auto& y : Y) nz = nz || !y.zero();
    if (nz) out.homogeneous.push_back(Y);
  }
  if (inhom && part_combo) out.particular = build(*part_combo, true);
  if (!inhom) out.particular = std::nullopt;
  // exact verification
  auto verify = [&](const VecK& Y, bool with_rhs) {
    for (int r = 0; r < n; ++r) {
      RatFunc lhs = phi(Y[static_cast<size_t>(r)], fld);
      RatFunc r2(0);
      for (int c = 0; c < n; ++c) r2 += A(r, c) * Y[static_cast<size_t>(c)];
      if (with_rhs) r2 += rhs[static_cast<size_t>(r)];
      if (!(lhs == r2)) throw math_error("internal: system solution failed verification");
    }
  };
  for (auto& Y : out.homogeneous) verify(Y, false);
  if (out.particular) verify(*out.particular, inhom);
  return out;
}

std::optional<RatFunc> multiplicative_solve(const RatFunc& r, const FieldPtr& fld) {
  if (r.zero()) throw math_error("multiplicative_solve needs r != 0");
  // solutions of phi(y) = r y form at most one line over the constants
  std::map<long, RatFunc> c;
  c[1] = RatFunc(1);
  c[0] = -r;
  OreOp L(fld, c);
  SolutionSpace s = rational_solutions_scalar(L);
  if (s.basis.empty()) return std::nullopt;
  if (s.dimension() > 1)
    throw math_error("internal: multiplicative solution space has dimension > 1");
  return s.basis[0][0];
}

}  // namespace diffgal
