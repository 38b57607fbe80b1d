#include <diffgal/algnum.hpp>
#include <diffgal/linalg.hpp>
#include <diffgal/zfactor.hpp>

#include <sstream>

namespace diffgal {

namespace {

const Tower* common_tower(const AlgNum& a, const AlgNum& b) {
  const Tower* ta = a.tower();
  const Tower* tb = b.tower();
  if (ta && tb && ta != tb) throw math_error("AlgNum values from different towers");
  return ta ? ta : tb;
}

APoly to_apoly(const std::vector<AlgNum>& c) {
  APoly p;
  for (size_t i = 0; i < c.size(); ++i) p.set_coeff(static_cast<int>(i), c[i]);
  return p;
}

}  // namespace

AlgNum AlgNum::generator(const Tower* tower, int level) {
  if (!tower || level < 1 || level > tower->depth()) throw math_error("bad tower level");
  std::vector<AlgNum> c{AlgNum(0), AlgNum(1)};
  return from_coeffs(tower, level, std::move(c));
}

AlgNum AlgNum::from_coeffs(const Tower* tower, int level, std::vector<AlgNum> coeffs) {
  AlgNum a;
  a.tower_ = tower;
  a.depth_ = level;
  a.c_ = std::move(coeffs);
  a.normalize();
  return a;
}

void AlgNum::normalize() {
  if (depth_ == 0) return;
  // reduce mod the level minpoly when needed
  int deg = tower_->level_degree(depth_);
  if (static_cast<int>(c_.size()) > deg) {
    APoly p = to_apoly(c_);
    APoly r = p % tower_->minpoly(depth_);
    c_.assign(static_cast<size_t>(deg), AlgNum(0));
    for (int i = 0; i <= r.degree(); ++i) c_[static_cast<size_t>(i)] = r[i];
  }
  while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  if (c_.empty()) {
    depth_ = 0;
    q_ = 0;
    return;
  }
  if (c_.size() == 1) {
    AlgNum inner = c_[0];
    *this = inner;
    return;
  }
}

std::vector<AlgNum> AlgNum::coeffs_at(int level) const {
  if (depth_ == level) return c_;
  if (depth_ < level) return {*this};
  throw math_error("AlgNum deeper than requested level");
}

AlgNum operator+(const AlgNum& a, const AlgNum& b) {
  if (a.depth_ == 0 && b.depth_ == 0) {
    AlgNum r(a.q_ + b.q_);
    return r;
  }
  const Tower* tw = common_tower(a, b);
  int d = std::max(a.depth_, b.depth_);
  std::vector<AlgNum> ca = a.coeffs_at(d), cb = b.coeffs_at(d);
  std::vector<AlgNum> rc(std::max(ca.size(), cb.size()), AlgNum(0));
  for (size_t i = 0; i < rc.size(); ++i) {
    if (i < ca.size()) rc[i] = rc[i] + ca[i];
    if (i < cb.size()) rc[i] = rc[i] + cb[i];
  }
  return AlgNum::from_coeffs(tw, d, std::move(rc));
}

AlgNum operator-(const AlgNum& a, const AlgNum& b) { return a + (-b); }

AlgNum AlgNum::operator-() const {
  AlgNum r = *this;
  if (r.depth_ == 0) {
    r.q_ = -r.q_;
    return r;
  }
  for (auto& c : r.c_) c = -c;
  return r;
}

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  if (a.depth_ == 0 && b.depth_ == 0) return AlgNum(a.q_ * b.q_);
  if (is_zero(a) || is_zero(b)) return AlgNum(0);
  const Tower* tw = common_tower(a, b);
  int d = std::max(a.depth_, b.depth_);
  std::vector<AlgNum> ca = a.coeffs_at(d), cb = b.coeffs_at(d);
  std::vector<AlgNum> rc(ca.size() + cb.size() - 1, AlgNum(0));
  for (size_t i = 0; i < ca.size(); ++i) {
    if (is_zero(ca[i])) continue;
    for (size_t j = 0; j < cb.size(); ++j) rc[i + j] = rc[i + j] + ca[i] * cb[j];
  }
  return AlgNum::from_coeffs(tw, d, std::move(rc));
}

AlgNum AlgNum::inverse() const {
  if (is_zero(*this)) throw math_error("division by zero AlgNum");
  if (depth_ == 0) return AlgNum(QQ(1) / q_);
  APoly p = to_apoly(c_);
  APoly s, t;
  APoly g = APoly::xgcd(p, tower_->minpoly(depth_), s, t);
  if (g.degree() != 0) throw math_error("tower minpoly not irreducible (xgcd)");
  // g == 1 after monic normalization inside xgcd
  std::vector<AlgNum> rc;
  for (int i = 0; i <= s.degree(); ++i) rc.push_back(s[i]);
  return AlgNum::from_coeffs(tower_, depth_, std::move(rc));
}

AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }

AlgNum AlgNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  AlgNum r(1), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool operator==(const AlgNum& a, const AlgNum& b) {
  if (a.depth_ != b.depth_) return false;
  if (a.depth_ == 0) return a.q_ == b.q_;
  return a.c_ == b.c_;
}

int AlgNum::cmp(const AlgNum& a, const AlgNum& b) {
  if (a.depth_ != b.depth_) return a.depth_ < b.depth_ ? -1 : 1;
  if (a.depth_ == 0) return ::cmp(a.q_, b.q_);
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
  for (size_t i = a.c_.size(); i-- > 0;) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string AlgNum::str() const {
  if (depth_ == 0) return to_string(q_);
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (is_zero(c_[i])) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].str() << ")";
    if (i >= 1) {
      os << "*g" << depth_;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

// ---------- Tower ----------

std::shared_ptr<Tower> Tower::create(int max_depth) {
  auto t = std::shared_ptr<Tower>(new Tower());
  t->max_depth_ = max_depth;
  return t;
}

const APoly& Tower::minpoly(int level) const {
  if (level < 1 || level > depth()) throw math_error("tower level out of range");
  return levels_[static_cast<size_t>(level - 1)];
}

int Tower::level_degree(int level) const { return minpoly(level).degree(); }

long Tower::total_degree() const {
  long d = 1;
  for (int i = 1; i <= depth(); ++i) d *= level_degree(i);
  return d;
}

int Tower::append(const APoly& minpoly) {
  std::lock_guard<std::mutex> lk(write_mu_);
  int cur = depth_.load(std::memory_order_relaxed);
  if (cur >= max_depth_) throw math_error("constants tower depth cap reached");
  if (minpoly.degree() < 2) throw math_error("tower extension must have degree >= 2");
  if (!(minpoly.lc() == AlgNum(1))) throw math_error("tower minpoly must be monic");
  levels_.push_back(minpoly);
  depth_.store(cur + 1, std::memory_order_release);
  return cur + 1;
}

// ---------- norms, torsion ----------

namespace {

// resultant of two polynomials over the AlgNum field (Sylvester determinant)
AlgNum resultant_field(const APoly& a, const APoly& b) {
  int m = a.degree(), n = b.degree();
  if (m < 0 || n < 0) return AlgNum(0);
  if (m == 0) return a[0].pow(n);
  if (n == 0) return b[0].pow(m);
  Mat<AlgNum> s(m + n, m + n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s(i, i + j) = a[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s(n + i, i + j) = b[n - j];
  return determinant(s);
}

}  // namespace

QQ norm_full(const AlgNum& a, const Tower* tower) {
  const Tower* tw = a.tower() ? a.tower() : tower;
  AlgNum r = a;
  int top = tw ? tw->depth() : 0;
  for (int lvl = top; lvl >= 1; --lvl) {
    if (r.depth() == lvl) {
      APoly p = to_apoly(r.coeffs_at(lvl));
      r = resultant_field(tw->minpoly(lvl), p);
    } else if (r.depth() < lvl) {
      r = r.pow(tw->level_degree(lvl));
    }
  }
  return r.rational();
}

std::optional<long> is_root_of_unity(const AlgNum& a) {
  if (is_zero(a)) return std::nullopt;
  if (a.is_rational()) {
    if (a.rational() == 1) return 1;
    if (a.rational() == -1) return 2;
    return std::nullopt;
  }
  // order k of a torsion element satisfies phi(k) <= [Q(a):Q] <= D and
  // k <= 2*phi(k)^2
  long D = a.tower()->total_degree();
  long bound = 2 * D * D;
  AlgNum p = a;
  for (long k = 1; k <= bound; ++k) {
    if (p == AlgNum(1)) return k;
    p = p * a;
  }
  return std::nullopt;
}

// ---------- factorization over the tower ----------

namespace {

// max tower depth among coefficients
int poly_level(const APoly& f) {
  int d = 0;
  for (auto& c : f.coeffs()) d = std::max(d, c.depth());
  return d;
}

const Tower* poly_tower(const APoly& f) {
  for (auto& c : f.coeffs())
    if (c.tower()) return c.tower();
  return nullptr;
}

APoly from_qpoly(const QPoly& q) {
  APoly r;
  for (int i = 0; i <= q.degree(); ++i) r.set_coeff(i, AlgNum(q[i]));
  return r;
}

QPoly to_qpoly(const APoly& p) {
  QPoly r;
  for (int i = 0; i <= p.degree(); ++i) {
    if (!p[i].is_rational()) throw math_error("polynomial is not rational");
    r.set_coeff(i, p[i].rational());
  }
  return r;
}

// exact division in AlgNum[x] viewed as a domain operation for Bareiss
APoly exact_div(const APoly& a, const APoly& b) {
  APoly q, r;
  APoly::divrem(a, b, q, r);
  if (!r.zero()) throw math_error("inexact polynomial division in Bareiss step");
  return q;
}

// Res_theta(m(theta), g(theta, x)) where g is given as a polynomial in theta
// with coefficients in K[x]
APoly norm_resultant(const APoly& m, const std::vector<APoly>& g_theta) {
  int dm = m.degree();
  int dg = static_cast<int>(g_theta.size()) - 1;
  while (dg >= 0 && g_theta[static_cast<size_t>(dg)].zero()) --dg;
  if (dg < 0) return APoly();
  if (dg == 0) {
    APoly r(AlgNum(1));
    for (int i = 0; i < dm; ++i) r = r * g_theta[0];
    return r;  // g constant in theta: Res = g^deg(m)
  }
  int n = dm + dg;
  Mat<APoly> s(n, n);
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j <= dm; ++j) s(i, i + j) = APoly(m[dm - j]);
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j <= dg; ++j) s(dg + i, i + j) = g_theta[static_cast<size_t>(dg - j)];
  return bareiss_determinant<APoly>(s, [](const APoly& a, const APoly& b) {
    return exact_div(a, b);
  });
}

bool poly_cmp_less(const APoly& a, const APoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    int c = AlgNum::cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

namespace {

std::vector<APoly> factor_at_level(const APoly& f, const Tower* tw, int lvl) {
  if (f.degree() < 1) return {};
  if (lvl == 0) {
    std::vector<APoly> out;
    for (auto& q : factor_squarefree_rational(to_qpoly(f))) out.push_back(from_qpoly(q));
    std::sort(out.begin(), out.end(), poly_cmp_less);
    return out;
  }
  AlgNum theta = AlgNum::generator(tw, lvl);
  APoly fm = f.monic();
  if (APoly::gcd(fm, fm.derivative()).degree() != 0)
    throw math_error("factor_squarefree_tower requires a squarefree input");
  for (long trial = 0;; ++trial) {
    long s = (trial % 2 == 0) ? trial / 2 : -(trial / 2 + 1);
    // g(x) := f(x - s*theta)
    APoly shift;
    shift.set_coeff(1, AlgNum(1));
    shift.set_coeff(0, AlgNum(-s) * theta);
    APoly g = fm.compose(shift);
    // view g as polynomial in theta with coefficients in K_{lvl-1}[x]
    int ldeg = tw->level_degree(lvl);
    std::vector<APoly> g_theta(static_cast<size_t>(ldeg), APoly());
    for (int i = 0; i <= g.degree(); ++i) {
      std::vector<AlgNum> comps = g[i].coeffs_at(lvl);
      for (size_t t = 0; t < comps.size(); ++t) {
        APoly cur = g_theta[t];
        cur.set_coeff(i, comps[t]);
        g_theta[t] = cur;
      }
    }
    APoly m_low = tw->minpoly(lvl);
    APoly norm = norm_resultant(m_low, g_theta);
    if (norm.degree() != fm.degree() * m_low.degree()) continue;  // degenerate shift
    if (APoly::gcd(norm, norm.derivative()).degree() != 0) continue;
    std::vector<APoly> nf = factor_at_level(norm, tw, lvl - 1);
    std::vector<APoly> out;
    APoly unshift;
    unshift.set_coeff(1, AlgNum(1));
    unshift.set_coeff(0, AlgNum(s) * theta);
    for (auto& ni : nf) {
      APoly cand = APoly::gcd(fm, ni.compose(unshift));
      if (cand.degree() > 0) out.push_back(cand.monic());
    }
    std::sort(out.begin(), out.end(), poly_cmp_less);
    return out;
  }
}

}  // namespace

std::vector<APoly> factor_squarefree_tower(const APoly& f, const Tower* tower) {
  const Tower* tw = tower ? tower : poly_tower(f);
  int lvl = tw ? tw->depth() : 0;
  if (poly_level(f) > lvl) throw math_error("polynomial deeper than its tower");
  return factor_at_level(f, tw, lvl);
}

std::vector<std::pair<APoly, int>> factor_tower(const APoly& f, const Tower* tower) {
  std::vector<std::pair<APoly, int>> out;
  for (auto& [sf, mult] : squarefree_decomposition(f))
    for (auto& irr : factor_squarefree_tower(sf, tower)) out.emplace_back(irr, mult);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return poly_cmp_less(a.first, b.first);
  });
  return out;
}

AlgNum adjoin_root(Tower* tower, const APoly& p) {
  if (p.degree() < 1) throw math_error("adjoin_root needs a nonconstant polynomial");
  APoly sf = squarefree_part(p.monic());
  auto factors = factor_squarefree_tower(sf, tower);
  // prefer an existing root: any linear factor
  for (auto& g : factors)
    if (g.degree() == 1) return -g[0];
  // otherwise extend by the first (lowest-degree) irreducible factor
  const APoly& m = factors.front();
  int lvl = tower->append(m);
  return AlgNum::generator(tower, lvl);
}

namespace {
void collect_coords(const AlgNum& a, const Tower* tw, int level, std::vector<QQ>& out) {
  if (level == 0) {
    out.push_back(a.is_rational() ? a.rational() : QQ(0));
    if (!a.is_rational()) throw math_error("coordinate collection: depth mismatch");
    return;
  }
  std::vector<AlgNum> comps = a.coeffs_at(level);
  comps.resize(static_cast<size_t>(tw->level_degree(level)), AlgNum(0));
  for (auto& c : comps) collect_coords(c, tw, level - 1, out);
}
}  // namespace

std::vector<QQ> q_coordinates(const AlgNum& a, const Tower* tower) {
  const Tower* tw = a.tower() ? a.tower() : tower;
  std::vector<QQ> out;
  collect_coords(a, tw, tw ? tw->depth() : 0, out);
  return out;
}

namespace {
void content_walk(const AlgNum& a, ZZ& num_gcd, ZZ& den_lcm) {
  if (a.is_rational()) {
    if (sgn(a.rational()) == 0) return;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), a.rational().get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.rational().get_den().get_mpz_t());
    return;
  }
  for (auto& c : a.coeffs_at(a.depth())) content_walk(c, num_gcd, den_lcm);
}
}  // namespace

QQ rational_content(const AlgNum& a) {
  ZZ num_gcd = 0, den_lcm = 1;
  content_walk(a, num_gcd, den_lcm);
  if (is_zero(num_gcd)) return QQ(0);
  QQ q(num_gcd, den_lcm);
  q.canonicalize();
  return q;
}

std::vector<long> integer_roots_tower(const APoly& p, const Tower* tower) {
  if (p.zero()) throw math_error("integer roots of the zero polynomial");
  // superset from the first nonvanishing rational coordinate, then verify
  size_t dim = q_coordinates(p[0], tower).size();
  for (size_t k = 0; k < dim; ++k) {
    QPoly coord;
    for (int i = 0; i <= p.degree(); ++i)
      coord.set_coeff(i, q_coordinates(p[i], tower)[k]);
    if (coord.zero()) continue;
    std::vector<long> out;
    for (auto& z : integer_roots(coord)) {
      long j = to_long(z);
      if (p.eval(AlgNum(j)) == AlgNum(0)) out.push_back(j);
    }
    return out;
  }
  throw math_error("integer roots: polynomial was zero after all");
}

std::string to_string(const APoly& p, const std::string& var) {
  if (p.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    if (is_zero(p[i])) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !(p[i] == AlgNum(1))) {
      os << "(" << p[i].str() << ")";
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace diffgal
