#include <diffgal/ore_op.hpp>

#include <sstream>

namespace diffgal {

OreOp::OreOp(FieldPtr fld, std::map<long, RatFunc> coeffs)
    : fld_(std::move(fld)), c_(std::move(coeffs)) {
  trim();
}

void OreOp::trim() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second.zero())
      it = c_.erase(it);
    else
      ++it;
  }
}

long OreOp::min_exp() const {
  if (zero()) throw math_error("support of zero operator");
  return c_.begin()->first;
}

long OreOp::max_exp() const {
  if (zero()) throw math_error("support of zero operator");
  return c_.rbegin()->first;
}

RatFunc OreOp::coeff(long i) const {
  auto it = c_.find(i);
  return it == c_.end() ? RatFunc(0) : it->second;
}

namespace {
void check_same_field(const OreOp& a, const OreOp& b) {
  if (a.field() && b.field() && !a.field()->same_field(*b.field()))
    throw spec_mismatch("operators over different difference fields");
}
}  // namespace

OreOp operator+(const OreOp& a, const OreOp& b) {
  check_same_field(a, b);
  std::map<long, RatFunc> c = a.c_;
  for (auto& [e, v] : b.c_) {
    auto it = c.find(e);
    if (it == c.end())
      c[e] = v;
    else
      it->second += v;
  }
  return OreOp(a.fld_ ? a.fld_ : b.fld_, std::move(c));
}

OreOp OreOp::operator-() const {
  OreOp r = *this;
  for (auto& [e, v] : r.c_) v = -v;
  return r;
}

OreOp operator-(const OreOp& a, const OreOp& b) { return a + (-b); }

OreOp operator*(const OreOp& a, const OreOp& b) {
  check_same_field(a, b);
  const FieldPtr& fld = a.fld_ ? a.fld_ : b.fld_;
  std::map<long, RatFunc> c;
  for (auto& [i, ai] : a.c_)
    for (auto& [j, bj] : b.c_) {
      RatFunc term = ai * phi(bj, *fld, i);
      auto it = c.find(i + j);
      if (it == c.end())
        c[i + j] = term;
      else
        it->second += term;
    }
  return OreOp(fld, std::move(c));
}

OreOp operator*(const RatFunc& s, const OreOp& a) {
  OreOp r = a;
  for (auto& [e, v] : r.c_) v = s * v;
  r.trim();
  return r;
}

bool operator==(const OreOp& a, const OreOp& b) { return a.c_ == b.c_; }

OreOp OreOp::dual() const {
  std::map<long, RatFunc> c;
  for (auto& [i, ai] : c_) c[-i] = phi(ai, *fld_, -i);
  return OreOp(fld_, std::move(c));
}

OreOp OreOp::equation_normal_form() const {
  if (zero()) throw math_error("normal form of zero operator");
  long m = min_exp();
  // left-multiply by phi^{-m}
  std::map<long, RatFunc> c;
  for (auto& [i, ai] : c_) c[i - m] = phi(ai, *fld_, -m);
  // clear denominators
  APoly den(AlgNum(1));
  for (auto& [i, ai] : c) den = den * (ai.den() / APoly::gcd(den, ai.den()));
  APoly content;
  std::map<long, RatFunc> pc;
  for (auto& [i, ai] : c) {
    RatFunc v = ai * RatFunc(den);
    if (!v.is_polynomial()) throw math_error("denominator clearing failed");
    pc[i] = v;
    content = content.zero() ? v.num() : APoly::gcd(content, v.num());
  }
  for (auto& [i, ai] : pc) ai = ai * RatFunc(APoly(AlgNum(1)), content);
  // monic top coefficient
  AlgNum lc = pc.rbegin()->second.num().lc();
  for (auto& [i, ai] : pc) ai = RatFunc(lc.inverse()) * ai;
  return OreOp(fld_, std::move(pc));
}

std::vector<RatFunc> OreOp::equation_coeffs() const {
  OreOp nf = equation_normal_form();
  std::vector<RatFunc> out(static_cast<size_t>(nf.max_exp()) + 1, RatFunc(0));
  for (auto& [i, ai] : nf.c_) out[static_cast<size_t>(i)] = ai;
  return out;
}

RatFunc OreOp::apply(const RatFunc& y) const {
  RatFunc r(0);
  for (auto& [i, ai] : c_) r += ai * phi(y, *fld_, i);
  return r;
}

std::string OreOp::str() const {
  if (zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    if (it->first != 0) {
      os << "*phi";
      if (it->first != 1) os << "^" << it->first;
    }
  }
  return os.str();
}

void ore_right_divide(const OreOp& L, const OreOp& D, OreOp& Q, OreOp& R) {
  if (D.zero()) throw math_error("Ore division by zero operator");
  const FieldPtr& fld = L.field() ? L.field() : D.field();
  Q = OreOp(fld);
  R = L;
  long dtop = D.max_exp();
  const RatFunc& dlc = D.coeffs().rbegin()->second;
  while (!R.zero() && R.max_exp() >= dtop) {
    long m = R.max_exp() - dtop;
    RatFunc q = R.coeffs().rbegin()->second / phi(dlc, *fld, m);
    OreOp qterm = OreOp::phi_power(fld, m, q);
    Q = Q + qterm;
    R = R - qterm * D;
  }
}

}  // namespace diffgal
