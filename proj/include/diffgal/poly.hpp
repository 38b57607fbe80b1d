#ifndef DIFFGAL_POLY_HPP
#define DIFFGAL_POLY_HPP

#include <diffgal/common.hpp>

#include <algorithm>
#include <functional>
#include <initializer_list>

namespace diffgal {

// Dense univariate polynomial over a field F.  F needs field arithmetic,
// construction from int, equality, and a free is_zero(F).
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(const F& c) {
    if (!is_zero(c)) c_.push_back(c);
  }
  explicit Poly(int v) : Poly(F(v)) {}
  Poly(std::initializer_list<F> asc) : c_(asc) { trim(); }

  static Poly monomial(const F& c, int deg) {
    Poly p;
    if (is_zero(c)) return p;
    p.c_.assign(static_cast<size_t>(deg) + 1, F(0));
    p.c_.back() = c;
    return p;
  }
  static Poly x() { return monomial(F(1), 1); }

  // degree of 0 is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  bool constant() const { return c_.size() <= 1; }

  const F& operator[](int i) const {
    static const F zero_{0};
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero_;
    return c_[static_cast<size_t>(i)];
  }
  void set_coeff(int i, const F& v) {
    if (i >= static_cast<int>(c_.size())) {
      if (is_zero(v)) return;
      c_.resize(static_cast<size_t>(i) + 1, F(0));
    }
    c_[static_cast<size_t>(i)] = v;
    trim();
  }

  const F& lc() const {
    if (zero()) throw math_error("lc of zero polynomial");
    return c_.back();
  }
  const F& tc() const {
    if (zero()) throw math_error("tc of zero polynomial");
    return c_.front();
  }
  // z-adic valuation; valuation of 0 reported as a large sentinel via throw.
  int valuation() const {
    if (zero()) throw math_error("valuation of zero polynomial");
    for (size_t i = 0; i < c_.size(); ++i)
      if (!is_zero(c_[i])) return static_cast<int>(i);
    return 0;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), F(0));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a[(int)i] + b[(int)i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), F(0));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a[(int)i] - b[(int)i];
    r.trim();
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = F(0) - c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  friend Poly operator*(const F& s, const Poly& p) {
    Poly r = p;
    for (auto& c : r.c_) c = s * c;
    r.trim();
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Euclidean division; divisor must be nonzero.
  static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.zero()) throw math_error("polynomial division by zero");
    q = Poly();
    r = a;
    F inv = F(1) / b.lc();
    while (!r.zero() && r.degree() >= b.degree()) {
      int d = r.degree() - b.degree();
      F c = r.lc() * inv;
      q.set_coeff(d, q[d] + c);
      for (int i = 0; i <= b.degree(); ++i)
        r.c_[static_cast<size_t>(i + d)] = r[i + d] - c * b[i];
      r.trim();
    }
  }
  friend Poly operator/(const Poly& a, const Poly& b) {
    Poly q, r;
    divrem(a, b, q, r);
    return q;
  }
  friend Poly operator%(const Poly& a, const Poly& b) {
    Poly q, r;
    divrem(a, b, q, r);
    return r;
  }

  Poly monic() const {
    if (zero()) return *this;
    return (F(1) / lc()) * *this;
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.zero()) {
      Poly r = a % b;
      a = b;
      b = r;
    }
    return a.monic();
  }

  // g = gcd = s*a + t*b, g monic (or zero when both inputs zero)
  static Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
    Poly r0 = a, r1 = b;
    Poly s0(F(1)), s1, t0, t1(F(1));
    while (!r1.zero()) {
      Poly q, r;
      divrem(r0, r1, q, r);
      r0 = r1;
      r1 = r;
      Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
      s0 = s1;
      s1 = s2;
      t0 = t1;
      t1 = t2;
    }
    if (r0.zero()) {
      s = Poly();
      t = Poly();
      return r0;
    }
    F inv = F(1) / r0.lc();
    s = inv * s0;
    t = inv * t0;
    return inv * r0;
  }

  Poly derivative() const {
    Poly r;
    for (int i = 1; i <= degree(); ++i) r.set_coeff(i - 1, F(i) * (*this)[i]);
    return r;
  }

  template <class T>
  T eval(const T& x) const {
    T acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + T((*this)[i]);
    return acc;
  }

  // compose with another polynomial: this(g(x))
  Poly compose(const Poly& g) const {
    Poly acc;
    for (int i = degree(); i >= 0; --i) acc = acc * g + Poly((*this)[i]);
    return acc;
  }

  // coefficient-wise map into another field
  template <class G, class Fn>
  Poly<G> map(Fn&& fn) const {
    Poly<G> r;
    for (int i = 0; i <= degree(); ++i) r.set_coeff(i, fn((*this)[i]));
    return r;
  }

  Poly pow(long e) const {
    if (e < 0) throw math_error("negative polynomial power");
    Poly r(F(1)), base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  const std::vector<F>& coeffs() const { return c_; }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
inline bool is_zero(const Poly<F>& p) {
  return p.zero();
}

// Yun squarefree decomposition (characteristic 0): returns pairs
// (factor, multiplicity) with factor monic squarefree, pairwise coprime.
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree_decomposition(const Poly<F>& f) {
  std::vector<std::pair<Poly<F>, int>> out;
  if (f.degree() < 1) return out;
  Poly<F> p = f.monic();
  Poly<F> d = p.derivative();
  Poly<F> a = Poly<F>::gcd(p, d);
  Poly<F> b = p / a, c = d / a;
  int mult = 1;
  while (b.degree() > 0) {
    Poly<F> w = c - b.derivative();
    Poly<F> g = Poly<F>::gcd(b, w);
    if (g.degree() > 0) out.emplace_back(g, mult);
    b = b / g;
    c = w / g;
    ++mult;
  }
  return out;
}

template <class F>
Poly<F> squarefree_part(const Poly<F>& f) {
  Poly<F> r(F(1));
  for (auto& [g, m] : squarefree_decomposition(f)) r = r * g;
  return r;
}

}  // namespace diffgal

#endif
