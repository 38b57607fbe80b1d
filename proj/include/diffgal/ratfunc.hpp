#ifndef DIFFGAL_RATFUNC_HPP
#define DIFFGAL_RATFUNC_HPP

#include <diffgal/algnum.hpp>

namespace diffgal {

// Reduced fraction of polynomials over the constants tower in one variable z:
// gcd(num, den) = 1 and den monic after every operation.
class RatFunc {
 public:
  RatFunc() : num_(), den_(AlgNum(1)) {}
  RatFunc(int v) : num_(APoly(AlgNum(v))), den_(APoly(AlgNum(1))) {}
  RatFunc(const AlgNum& v) : num_(APoly(v)), den_(APoly(AlgNum(1))) {}
  RatFunc(const APoly& p) : num_(p), den_(APoly(AlgNum(1))) {}
  RatFunc(APoly num, APoly den);

  static RatFunc z() { return RatFunc(APoly::x()); }

  const APoly& num() const { return num_; }
  const APoly& den() const { return den_; }
  bool zero() const { return num_.zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  AlgNum constant_value() const {
    if (!is_constant()) throw math_error("RatFunc is not constant");
    return num_.zero() ? AlgNum(0) : num_[0];
  }

  // deg f = deg num - deg den (deg 0 = -infinity reported via throw)
  int degree() const {
    if (zero()) throw math_error("degree of zero RatFunc");
    return num_.degree() - den_.degree();
  }
  // val0 f = val0 num - val0 den
  int valuation0() const {
    if (zero()) throw math_error("valuation of zero RatFunc");
    return num_.valuation() - den_.valuation();
  }
  // leading coefficient ratio (the value of z^{-deg} f at infinity)
  AlgNum leading_value() const { return num_.lc() / den_.lc(); }
  // coefficient of z^{val0} in the Laurent expansion at 0
  AlgNum trailing_value() const {
    return num_[num_.valuation()] / den_[den_.valuation()];
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(long e) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  AlgNum eval(const AlgNum& x) const;

  // substitute z -> g(z)
  RatFunc compose(const RatFunc& g) const;

  std::string str() const;

 private:
  APoly num_, den_;
  void reduce();
};

inline bool is_zero(const RatFunc& f) { return f.zero(); }

using VecK = std::vector<RatFunc>;

// Scale a row to a common polynomial form with coprime numerators: divide by
// gcd(numerators)/lcm(denominators).
template <>
struct RowScaler<RatFunc> {
  static void scale(Mat<RatFunc>& m, int row, int from_col) {
    APoly num_gcd, den_lcm(AlgNum(1));
    for (int j = from_col; j < m.cols(); ++j) {
      const RatFunc& e = m(row, j);
      if (e.zero()) continue;
      num_gcd = num_gcd.zero() ? e.num() : APoly::gcd(num_gcd, e.num());
      den_lcm = den_lcm * (e.den() / APoly::gcd(den_lcm, e.den()));
    }
    if (num_gcd.zero()) return;
    RatFunc scale(den_lcm, num_gcd);
    for (int j = from_col; j < m.cols(); ++j) m(row, j) = scale * m(row, j);
  }
};

}  // namespace diffgal

#endif
