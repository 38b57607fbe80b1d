#ifndef DIFFGAL_ZFACTOR_HPP
#define DIFFGAL_ZFACTOR_HPP

#include <diffgal/common.hpp>
#include <diffgal/poly.hpp>

namespace diffgal {

using QPoly = Poly<QQ>;

// Monic irreducible factors of a squarefree rational polynomial.
std::vector<QPoly> factor_squarefree_rational(const QPoly& f);

// Full factorization: (monic irreducible, multiplicity) pairs, deterministic
// order.  The leading coefficient is dropped.
std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& f);

bool is_irreducible_rational(const QPoly& f);

// Rational roots of f.
std::vector<QQ> rational_roots(const QPoly& f);

// All integer roots of f (f != 0).
std::vector<ZZ> integer_roots(const QPoly& f);

}  // namespace diffgal

#endif
