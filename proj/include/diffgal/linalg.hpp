#ifndef DIFFGAL_LINALG_HPP
#define DIFFGAL_LINALG_HPP

#include <diffgal/common.hpp>

#include <optional>
#include <vector>

namespace diffgal {

// Dense matrix over an exact field, row-major.
template <class F>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int r, int c) : rows_(r), cols_(c), a_(static_cast<size_t>(r) * c, F(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  F& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const F& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw math_error("matrix product shape mismatch");
    Mat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + a(i, k) * b(k, j);
      }
    return r;
  }
  friend Mat operator+(const Mat& a, const Mat& b) {
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::vector<F> operator*(const std::vector<F>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw math_error("matvec shape mismatch");
    std::vector<F> r(rows_, F(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<F> a_;
};

// Row rescaling to tame coefficient growth during exact elimination.
// The generic version is a no-op; fields with a useful notion of content
// specialize it (any nonzero scalar multiple of a row is equivalent).
template <class F>
struct RowScaler {
  static void scale(Mat<F>&, int, int) {}
};

// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<int> rref(Mat<F>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    RowScaler<F>::scale(m, r, c);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F f = m(i, c) / m(r, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
      RowScaler<F>::scale(m, i, c + 1);
    }
    pivots.push_back(c);
    ++r;
  }
  // final pass: unit pivots
  for (size_t k = 0; k < pivots.size(); ++k) {
    int c = pivots[k];
    F inv = F(1) / m(static_cast<int>(k), c);
    for (int j = c; j < m.cols(); ++j)
      m(static_cast<int>(k), j) = inv * m(static_cast<int>(k), j);
  }
  return pivots;
}

// Basis of the right nullspace of m.
template <class F>
std::vector<std::vector<F>> nullspace(Mat<F> m) {
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[c] = F(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      if (pivots[r] < c) v[pivots[r]] = F(0) - m(static_cast<int>(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of m x = b, if any.
template <class F>
std::optional<std::vector<F>> solve_particular(const Mat<F>& m, const std::vector<F>& b) {
  Mat<F> aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[static_cast<size_t>(i)];
  }
  std::vector<int> pivots = rref(aug);
  for (int c : pivots)
    if (c == m.cols()) return std::nullopt;
  std::vector<F> x(m.cols(), F(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<int>(r), m.cols());
  return x;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& m) {
  if (m.rows() != m.cols()) throw math_error("inverse of non-square matrix");
  int n = m.rows();
  Mat<F> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
  Mat<F> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class F>
F determinant(Mat<F> m) {
  if (m.rows() != m.cols()) throw math_error("determinant of non-square matrix");
  int n = m.rows();
  F det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) return F(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = F(0) - det;
    }
    det = det * m(c, c);
    F inv = F(1) / m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      F f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

// Fraction-free determinant over an integral domain D (needs exact division
// via a callable divide(a, b) computing a/b when the division is exact).
template <class D, class DivFn>
D bareiss_determinant(Mat<D> m, DivFn&& divide) {
  int n = m.rows();
  if (n == 0) return D(1);
  D prev(1);
  int sign = 1;
  for (int c = 0; c < n - 1; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) return D(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      sign = -sign;
    }
    for (int i = c + 1; i < n; ++i)
      for (int j = c + 1; j < n; ++j)
        m(i, j) = divide(m(c, c) * m(i, j) - m(i, c) * m(c, j), prev);
    prev = m(c, c);
  }
  D det = m(n - 1, n - 1);
  if (sign < 0) det = D(0) - det;
  return det;
}

}  // namespace diffgal

#endif
