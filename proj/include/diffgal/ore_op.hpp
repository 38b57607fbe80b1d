#ifndef DIFFGAL_ORE_OP_HPP
#define DIFFGAL_ORE_OP_HPP

#include <diffgal/diff_field.hpp>

#include <map>

namespace diffgal {

// Twisted Laurent polynomial sum a_i phi^i with the twist phi*f = phi(f)*phi.
// Finite support over Z; coefficients in k.
class OreOp {
 public:
  OreOp() = default;
  explicit OreOp(FieldPtr fld) : fld_(std::move(fld)) {}
  OreOp(FieldPtr fld, std::map<long, RatFunc> coeffs);

  static OreOp from_ratfunc(FieldPtr fld, const RatFunc& f) {
    std::map<long, RatFunc> c;
    c[0] = f;
    return OreOp(std::move(fld), std::move(c));
  }
  static OreOp phi_power(FieldPtr fld, long k, const RatFunc& coeff = RatFunc(1)) {
    std::map<long, RatFunc> c;
    c[k] = coeff;
    return OreOp(std::move(fld), std::move(c));
  }

  const FieldPtr& field() const { return fld_; }
  const std::map<long, RatFunc>& coeffs() const { return c_; }
  bool zero() const { return c_.empty(); }
  long min_exp() const;
  long max_exp() const;
  // order of the operator: max_exp - min_exp
  long order() const { return zero() ? -1 : max_exp() - min_exp(); }
  RatFunc coeff(long i) const;

  friend OreOp operator+(const OreOp& a, const OreOp& b);
  friend OreOp operator-(const OreOp& a, const OreOp& b);
  friend OreOp operator*(const OreOp& a, const OreOp& b);
  OreOp operator-() const;
  friend OreOp operator*(const RatFunc& s, const OreOp& a);
  friend bool operator==(const OreOp& a, const OreOp& b);
  friend bool operator!=(const OreOp& a, const OreOp& b) { return !(a == b); }

  // sum phi^{-i}(a_i) phi^{-i}
  OreOp dual() const;

  // normalize to support [0, n] with nonzero trailing and leading
  // coefficients, by left-multiplying with a power of phi (does not change
  // the solution space); clears denominators to polynomial coefficients and
  // makes the content primitive-ish (divides by the gcd of numerators).
  OreOp equation_normal_form() const;

  // polynomial coefficient of the normal form, by index 0..order
  std::vector<RatFunc> equation_coeffs() const;

  // apply to a rational function
  RatFunc apply(const RatFunc& y) const;

  std::string str() const;

 private:
  FieldPtr fld_;
  std::map<long, RatFunc> c_;
  void trim();
};

// quotient/remainder of right division: L = Q*D + R, ord or support of R
// below D's top; exact over k
void ore_right_divide(const OreOp& L, const OreOp& D, OreOp& Q, OreOp& R);

}  // namespace diffgal

#endif
