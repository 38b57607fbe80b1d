#ifndef DIFFGAL_MATK_HPP
#define DIFFGAL_MATK_HPP

#include <diffgal/linalg.hpp>
#include <diffgal/ore_op.hpp>

namespace diffgal {

// Square matrix over k tagged with its difference field; system matrices are
// invertible and support the gauge action phi(T) A T^{-1}.
class MatK {
 public:
  MatK() = default;
  MatK(FieldPtr fld, Mat<RatFunc> entries) : fld_(std::move(fld)), m_(std::move(entries)) {
    if (m_.rows() != m_.cols()) throw math_error("MatK must be square");
  }
  static MatK identity(FieldPtr fld, int n) { return MatK(std::move(fld), Mat<RatFunc>::identity(n)); }

  const FieldPtr& field() const { return fld_; }
  const Mat<RatFunc>& mat() const { return m_; }
  Mat<RatFunc>& mat() { return m_; }
  int size() const { return m_.rows(); }
  RatFunc& operator()(int i, int j) { return m_(i, j); }
  const RatFunc& operator()(int i, int j) const { return m_(i, j); }

  friend MatK operator*(const MatK& a, const MatK& b) {
    return MatK(a.fld_ ? a.fld_ : b.fld_, a.m_ * b.m_);
  }
  friend bool operator==(const MatK& a, const MatK& b) { return a.m_ == b.m_; }
  friend bool operator!=(const MatK& a, const MatK& b) { return !(a == b); }

  RatFunc det() const { return determinant(m_); }
  MatK inv() const;
  MatK phi_map(long power = 1) const;

  std::string str() const;

 private:
  FieldPtr fld_;
  Mat<RatFunc> m_;
};

// companion matrix of an equation-form operator (support [0, n], a0*an != 0)
MatK companion(const OreOp& L);

// phi(T) * A * T^{-1}; T must be invertible
MatK gauge(const MatK& A, const MatK& T);

// A_[l] = phi^{l-1}(A) * ... * A
MatK iterate_system(const MatK& A, int ell);

// minimal recurrence of y = u . Y along phi(Y) = A Y + rhs:
//   sum_l b_l phi^l(y) = g  with  b = op coefficients, m = op order, and the
// chain rows r_0..r_m (r_{k+1} = phi(r_k) A) for solution reconstruction.
struct CovectorRecurrence {
  OreOp op;
  RatFunc g;
  std::vector<VecK> rows;  // r_0 .. r_{m-1}
};
CovectorRecurrence covector_recurrence(const MatK& A, const VecK& u, const VecK& rhs);

// a covector whose recurrence has full order n, trying a deterministic
// sequence; with the rows matrix M (rows r_0..r_{n-1}) invertible, solutions
// map via Y = M^{-1} (y, phi y, ..., phi^{n-1} y)^t
struct CyclicScalarization {
  VecK covector;
  OreOp op;             // order n
  Mat<RatFunc> rows;    // n x n, invertible
};
std::optional<CyclicScalarization> cyclic_scalarize(const MatK& A);

}  // namespace diffgal

#endif
