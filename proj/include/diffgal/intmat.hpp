#ifndef DIFFGAL_INTMAT_HPP
#define DIFFGAL_INTMAT_HPP

#include <diffgal/common.hpp>
#include <diffgal/linalg.hpp>

namespace diffgal {

using IMat = Mat<ZZ>;

// Row-style Hermite normal form: returns H = U*m with U unimodular, H in
// canonical row HNF (pivot entries positive, entries above pivots reduced,
// zero rows last).
IMat hnf_rows(IMat m, IMat* transform = nullptr);

// Smith normal form: D = U*m*V diagonal with d1 | d2 | ... ; returns D and
// fills the unimodular transforms when requested.
IMat snf(IMat m, IMat* left = nullptr, IMat* right = nullptr);

// Basis (rows) of the integer kernel {x : m * x^T = 0}, in HNF.
IMat integer_kernel(const IMat& m);

// Solve sum x_i * a_i = g where g = gcd(a_i) (extended Euclid over a vector).
std::vector<ZZ> bezout_vector(const std::vector<ZZ>& a, ZZ& g);

}  // namespace diffgal

#endif
