#include <diffgal/intmat.hpp>

namespace diffgal {

namespace {

void swap_rows(IMat& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void add_row(IMat& m, int dst, int src, const ZZ& f) {
  for (int j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void negate_row(IMat& m, int r) {
  for (int j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

void swap_cols(IMat& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void add_col(IMat& m, int dst, int src, const ZZ& f) {
  for (int i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

void negate_col(IMat& m, int c) {
  for (int i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

}  // namespace

IMat hnf_rows(IMat m, IMat* transform) {
  int rows = m.rows(), cols = m.cols();
  IMat u = IMat::identity(rows);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // eliminate below row r in column c by euclidean steps
    while (true) {
      int p = -1;
      for (int i = r; i < rows; ++i)
        if (!is_zero(m(i, c)) && (p < 0 || abs(m(i, c)) < abs(m(p, c)))) p = i;
      if (p < 0) break;
      if (p != r) {
        swap_rows(m, r, p);
        swap_rows(u, r, p);
      }
      bool done = true;
      for (int i = r + 1; i < rows; ++i) {
        if (is_zero(m(i, c))) continue;
        ZZ q = -floor_div(m(i, c), m(r, c));
        add_row(m, i, r, q);
        add_row(u, i, r, q);
        if (!is_zero(m(i, c))) done = false;
      }
      if (done) break;
    }
    if (is_zero(m(r, c))) continue;
    if (sgn(m(r, c)) < 0) {
      negate_row(m, r);
      negate_row(u, r);
    }
    for (int i = 0; i < r; ++i) {
      ZZ q = -floor_div(m(i, c), m(r, c));
      if (!is_zero(q)) {
        add_row(m, i, r, q);
        add_row(u, i, r, q);
      }
    }
    ++r;
  }
  if (transform) *transform = u;
  return m;
}

IMat snf(IMat m, IMat* left, IMat* right) {
  int rows = m.rows(), cols = m.cols();
  IMat u = IMat::identity(rows), v = IMat::identity(cols);
  int t = 0;
  while (t < rows && t < cols) {
    // find a nonzero pivot in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (!is_zero(m(i, j)) && (pi < 0 || abs(m(i, j)) < abs(m(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) {
      swap_rows(m, t, pi);
      swap_rows(u, t, pi);
    }
    if (pj != t) {
      swap_cols(m, t, pj);
      swap_cols(v, t, pj);
    }
    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      if (is_zero(m(i, t))) continue;
      ZZ q = -floor_div(m(i, t), m(t, t));
      add_row(m, i, t, q);
      add_row(u, i, t, q);
      if (!is_zero(m(i, t))) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (is_zero(m(t, j))) continue;
      ZZ q = -floor_div(m(t, j), m(t, t));
      add_col(m, j, t, q);
      add_col(v, j, t, q);
      if (!is_zero(m(t, j))) clean = false;
    }
    if (!clean) continue;
    // divisibility: m(t,t) must divide every remaining entry
    bool fixed = false;
    for (int i = t + 1; i < rows && !fixed; ++i)
      for (int j = t + 1; j < cols && !fixed; ++j)
        if (m(i, j) % m(t, t) != 0) {
          add_row(m, t, i, ZZ(1));
          add_row(u, t, i, ZZ(1));
          fixed = true;
        }
    if (fixed) continue;
    if (sgn(m(t, t)) < 0) {
      negate_row(m, t);
      negate_row(u, t);
    }
    ++t;
  }
  if (left) *left = u;
  if (right) *right = v;
  return m;
}

IMat integer_kernel(const IMat& m) {
  // kernel of x -> m x: columns x; work with transpose rows.
  IMat mt = m.transpose();
  IMat u;
  IMat h = hnf_rows(mt, &u);
  // rows of u corresponding to zero rows of h form a kernel basis
  std::vector<int> zero_rows;
  for (int i = 0; i < h.rows(); ++i) {
    bool z = true;
    for (int j = 0; j < h.cols(); ++j)
      if (!is_zero(h(i, j))) {
        z = false;
        break;
      }
    if (z) zero_rows.push_back(i);
  }
  IMat k(static_cast<int>(zero_rows.size()), m.cols());
  for (size_t i = 0; i < zero_rows.size(); ++i)
    for (int j = 0; j < m.cols(); ++j) k(static_cast<int>(i), j) = u(zero_rows[i], j);
  return hnf_rows(k);
}

std::vector<ZZ> bezout_vector(const std::vector<ZZ>& a, ZZ& g) {
  std::vector<ZZ> x(a.size(), ZZ(0));
  g = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    if (is_zero(g)) {
      g = abs(a[i]);
      x[i] = sgn(a[i]);
      continue;
    }
    ZZ s, t, g2;
    mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), a[i].get_mpz_t());
    for (auto& xi : x) xi *= s;
    x[i] = t;
    g = g2;
  }
  return x;
}

}  // namespace diffgal
