#include <diffgal/common.hpp>

#include <sstream>

namespace diffgal {

std::vector<ZZ> divisors(const ZZ& n) {
  if (is_zero(n)) throw math_error("divisors of zero");
  ZZ m = abs(n);
  std::vector<std::pair<ZZ, int>> fac;
  for (ZZ p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    fac.emplace_back(p, e);
  }
  if (m > 1) fac.emplace_back(m, 1);
  std::vector<ZZ> out{ZZ(1)};
  for (auto& [p, e] : fac) {
    size_t base = out.size();
    ZZ pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

std::string to_string(const QQ& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace diffgal
