#ifndef DIFFGAL_ALGNUM_HPP
#define DIFFGAL_ALGNUM_HPP

#include <diffgal/common.hpp>
#include <diffgal/linalg.hpp>
#include <diffgal/poly.hpp>

#include <atomic>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>

namespace diffgal {

class Tower;

// Element of the constants field: a number-field tower Q(g1,...,gm).  The
// canonical form is the minimal-depth nested polynomial representation, so
// structural equality is value equality.  Rationals carry no tower pointer;
// values must not outlive the Tower they reference.
class AlgNum {
 public:
  AlgNum() : depth_(0), q_(0) {}
  AlgNum(int v) : depth_(0), q_(v) {}
  AlgNum(long v) : depth_(0), q_(static_cast<signed long>(v)) {}
  AlgNum(const QQ& v) : depth_(0), q_(v) {}
  AlgNum(const ZZ& v) : depth_(0), q_(QQ(v)) {}

  static AlgNum generator(const Tower* tower, int level);
  // coefficients over depth < level; reduced mod the level minpoly by caller
  // or not (normalization reduces and demotes)
  static AlgNum from_coeffs(const Tower* tower, int level, std::vector<AlgNum> coeffs);

  int depth() const { return depth_; }
  const Tower* tower() const { return tower_; }
  bool is_rational() const { return depth_ == 0; }
  const QQ& rational() const {
    if (depth_ != 0) throw math_error("AlgNum is not rational");
    return q_;
  }
  bool is_integer_value() const { return depth_ == 0 && diffgal::is_integer(q_); }
  // coefficients of the value as a polynomial in the level-`level` generator
  // (constant vector when the value lives lower)
  std::vector<AlgNum> coeffs_at(int level) const;

  friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator/(const AlgNum& a, const AlgNum& b);
  AlgNum operator-() const;
  AlgNum inverse() const;
  AlgNum pow(long e) const;

  friend bool operator==(const AlgNum& a, const AlgNum& b);
  friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

  // total order (for deterministic sorting only)
  static int cmp(const AlgNum& a, const AlgNum& b);

  std::string str() const;

 private:
  friend bool is_zero(const AlgNum& a);
  const Tower* tower_ = nullptr;
  int depth_;
  QQ q_;                       // depth 0 payload
  std::vector<AlgNum> c_;      // depth > 0 payload, coeffs over depth-1
  void normalize();
};

inline bool is_zero(const AlgNum& a) { return a.depth() == 0 && sgn(a.rational()) == 0; }

using APoly = Poly<AlgNum>;

// Append-only extension tower.  Readers are lock-free (levels live in a deque
// and the published depth is an acquire/release counter); appends serialize.
class Tower {
 public:
  static std::shared_ptr<Tower> create(int max_depth = 16);

  int depth() const { return depth_.load(std::memory_order_acquire); }
  const APoly& minpoly(int level) const;
  int level_degree(int level) const;
  long total_degree() const;

  // minpoly must be monic and irreducible over the current tower with
  // coefficients of depth < depth()+1
  int append(const APoly& minpoly);

  int max_depth() const { return max_depth_; }

 private:
  Tower() = default;
  std::deque<APoly> levels_;
  std::atomic<int> depth_{0};
  std::mutex write_mu_;
  int max_depth_ = 16;
};

// Norm down to Q relative to the full current tower (the value's own tower,
// or the explicit one when the value is rational).
QQ norm_full(const AlgNum& a, const Tower* tower = nullptr);

// Exact torsion order of a, or nullopt when a is not a root of unity.
std::optional<long> is_root_of_unity(const AlgNum& a);

// Monic irreducible factors of a squarefree polynomial over the full tower
// (Trager norm descent).  Pass the ambient tower; factorization is relative
// to the whole current constants field even for rational inputs.
std::vector<APoly> factor_squarefree_tower(const APoly& f, const Tower* tower);

// Full factorization into (monic irreducible, multiplicity), leading
// coefficient dropped; deterministic order.
std::vector<std::pair<APoly, int>> factor_tower(const APoly& f, const Tower* tower);

// A root of an irreducible factor of p, extending the tower only when no
// linear factor exists over the current constants.
AlgNum adjoin_root(Tower* tower, const APoly& p);

// Coordinates of a over the Q-basis of the full tower (length = product of
// level degrees).
std::vector<QQ> q_coordinates(const AlgNum& a, const Tower* tower);

// gcd-of-numerators / lcm-of-denominators over all nested rational
// coordinates; 0 for the zero value
QQ rational_content(const AlgNum& a);

// All integer roots of a nonzero polynomial with tower coefficients.
std::vector<long> integer_roots_tower(const APoly& p, const Tower* tower);

std::string to_string(const APoly& p, const std::string& var = "x");

// content-based row scaling keeps exact elimination bit sizes bounded
template <>
struct RowScaler<AlgNum> {
  static void scale(Mat<AlgNum>& m, int row, int from_col) {
    QQ content(0);
    for (int j = from_col; j < m.cols(); ++j) {
      QQ c = rational_content(m(row, j));
      if (sgn(c) == 0) continue;
      if (sgn(content) == 0) {
        content = c;
        continue;
      }
      ZZ ng, dl;
      mpz_gcd(ng.get_mpz_t(), content.get_num().get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(dl.get_mpz_t(), content.get_den().get_mpz_t(), c.get_den().get_mpz_t());
      content = QQ(ng, dl);
      content.canonicalize();
    }
    if (sgn(content) == 0) return;
    AlgNum inv{QQ(1) / content};
    for (int j = from_col; j < m.cols(); ++j) m(row, j) = inv * m(row, j);
  }
};

}  // namespace diffgal

#endif
