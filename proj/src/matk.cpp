#include <diffgal/matk.hpp>

#include <sstream>

namespace diffgal {

MatK MatK::inv() const {
  auto r = inverse(m_);
  if (!r) throw math_error("singular matrix over k");
  return MatK(fld_, *r);
}

MatK MatK::phi_map(long power) const {
  Mat<RatFunc> r(m_.rows(), m_.cols());
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j < m_.cols(); ++j) r(i, j) = phi(m_(i, j), *fld_, power);
  return MatK(fld_, r);
}

std::string MatK::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m_.rows(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < m_.cols(); ++j) {
      if (j) os << ", ";
      os << m_(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

MatK companion(const OreOp& L) {
  std::vector<RatFunc> a = L.equation_coeffs();
  int n = static_cast<int>(a.size()) - 1;
  if (n < 1) throw math_error("companion needs an operator of positive order");
  if (a[0].zero() || a[static_cast<size_t>(n)].zero())
    throw math_error("companion needs a0 * an != 0");
  Mat<RatFunc> m(n, n);
  for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = RatFunc(1);
  for (int j = 0; j < n; ++j)
    m(n - 1, j) = -a[static_cast<size_t>(j)] / a[static_cast<size_t>(n)];
  return MatK(L.field(), m);
}

MatK gauge(const MatK& A, const MatK& T) {
  return T.phi_map(1) * A * T.inv();
}

MatK iterate_system(const MatK& A, int ell) {
  if (ell < 1) throw math_error("iterate needs ell >= 1");
  MatK r = A;
  for (int k = 1; k < ell; ++k) r = A.phi_map(k) * r;
  return r;
}

namespace {

VecK row_times_mat(const VecK& r, const Mat<RatFunc>& m, const DiffField& fld, bool apply_phi) {
  VecK out(static_cast<size_t>(m.cols()), RatFunc(0));
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) {
      RatFunc ri = apply_phi ? phi(r[static_cast<size_t>(i)], fld, 1) : r[static_cast<size_t>(i)];
      out[static_cast<size_t>(j)] += ri * m(i, j);
    }
  return out;
}

RatFunc dot(const VecK& a, const VecK& b, const DiffField& fld, bool apply_phi) {
  RatFunc s(0);
  for (size_t i = 0; i < a.size(); ++i) {
    RatFunc ai = apply_phi ? phi(a[i], fld, 1) : a[i];
    s += ai * b[i];
  }
  return s;
}

}  // namespace

CovectorRecurrence covector_recurrence(const MatK& A, const VecK& u, const VecK& rhs) {
  const DiffField& fld = *A.field();
  int n = A.size();
  std::vector<VecK> rows{u};
  std::vector<RatFunc> s{RatFunc(0)};
  for (int k = 0; k < n; ++k) {
    // r_{k+1} = phi(r_k) A ; s_{k+1} = phi(s_k) + phi(r_k) . rhs
    rows.push_back(row_times_mat(rows.back(), A.mat(), fld, true));
    RatFunc sk = phi(s.back(), fld, 1);
    if (!rhs.empty()) sk += dot(rows[rows.size() - 2], rhs, fld, true);
    s.push_back(sk);
    // dependency test: is r_{k+1} in span(r_0..r_k)?
    int m = k + 1;
    Mat<RatFunc> sys(n, m);
    for (int c = 0; c < m; ++c)
      for (int i = 0; i < n; ++i) sys(i, c) = rows[static_cast<size_t>(c)][static_cast<size_t>(i)];
    std::vector<RatFunc> b(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) b[static_cast<size_t>(i)] = rows.back()[static_cast<size_t>(i)];
    auto sol = solve_particular(sys, b);
    if (!sol) continue;
    // phi^m(y) = sum_l c_l phi^l(y) + (s_m - sum_l c_l s_l)
    std::map<long, RatFunc> oc;
    oc[m] = RatFunc(1);
    RatFunc g = s.back();
    for (int l = 0; l < m; ++l) {
      oc[l] = -(*sol)[static_cast<size_t>(l)];
      g -= (*sol)[static_cast<size_t>(l)] * s[static_cast<size_t>(l)];
    }
    rows.pop_back();
    return CovectorRecurrence{OreOp(A.field(), std::move(oc)), g, std::move(rows)};
  }
  throw math_error("covector recurrence did not terminate");
}

std::optional<CyclicScalarization> cyclic_scalarize(const MatK& A) {
  const int n = A.size();
  std::vector<VecK> candidates;
  for (int i = 0; i < n; ++i) {
    VecK e(static_cast<size_t>(n), RatFunc(0));
    e[static_cast<size_t>(i)] = RatFunc(1);
    candidates.push_back(e);
  }
  // sums and z-weighted combinations
  {
    VecK s(static_cast<size_t>(n), RatFunc(1));
    candidates.push_back(s);
    VecK zw(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) zw[static_cast<size_t>(i)] = RatFunc::z().pow(i);
    candidates.push_back(zw);
    for (int a = 1; a <= 3; ++a) {
      VecK v(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = RatFunc(1 + a * i) + RatFunc(a) * RatFunc::z().pow(i % 2 + 1);
      candidates.push_back(v);
    }
  }
  for (auto& u : candidates) {
    CovectorRecurrence rec = covector_recurrence(A, u, {});
    if (rec.op.max_exp() != n) continue;
    Mat<RatFunc> rows(n, n);
    for (int r = 0; r < n; ++r)
      for (int j = 0; j < n; ++j) rows(r, j) = rec.rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
    if (!inverse(rows)) continue;
    return CyclicScalarization{u, rec.op, rows};
  }
  return std::nullopt;
}

}  // namespace diffgal
