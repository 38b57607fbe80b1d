#include <diffgal/ratfunc.hpp>

#include <sstream>

namespace diffgal {

RatFunc::RatFunc(APoly num, APoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.zero()) throw math_error("RatFunc with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.zero()) {
    den_ = APoly(AlgNum(1));
    return;
  }
  APoly g = APoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  AlgNum lc = den_.lc();
  if (!(lc == AlgNum(1))) {
    AlgNum inv = lc.inverse();
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.zero()) throw math_error("RatFunc division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (zero()) throw math_error("inverse of zero RatFunc");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r(1), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

AlgNum RatFunc::eval(const AlgNum& x) const {
  AlgNum d = den_.eval(x);
  if (is_zero(d)) throw math_error("RatFunc evaluated at a pole");
  return num_.eval(x) / d;
}

RatFunc RatFunc::compose(const RatFunc& g) const {
  RatFunc n(0), d(0);
  // Horner over the fraction field
  n = RatFunc(0);
  for (int i = num_.degree(); i >= 0; --i) n = n * g + RatFunc(num_[i]);
  d = RatFunc(0);
  for (int i = den_.degree(); i >= 0; --i) d = d * g + RatFunc(den_[i]);
  return n / d;
}

std::string RatFunc::str() const {
  std::ostringstream os;
  if (is_polynomial()) {
    os << to_string(num_, "z");
  } else {
    os << "(" << to_string(num_, "z") << ")/(" << to_string(den_, "z") << ")";
  }
  return os.str();
}

}  // namespace diffgal
