#ifndef DIFFGAL_RATSOLVE_HPP
#define DIFFGAL_RATSOLVE_HPP

#include <diffgal/matk.hpp>

namespace diffgal {

// basis of a space of rational solution vectors; every element satisfies the
// defining equation exactly (asserted after every solve)
struct SolutionSpace {
  std::vector<VecK> basis;
  int dimension() const { return static_cast<int>(basis.size()); }
};

// Laurent support window for solutions of a polynomial-coefficient equation
// (Case Q valuation/degree data; Case S degree only, val fixed at 0).
struct SupportWindow {
  long lo = 0;
  long hi = -1;
  bool empty() const { return hi < lo; }
};

// solutions x in k[z] (or k[z, z^-1] in Case Q) of sum coeffs[i] phi^i(x) = 0
std::vector<APoly> polynomial_solutions(const std::vector<APoly>& coeffs,
                                        const DiffField& fld, bool laurent,
                                        long* shift_out = nullptr);

// Abramov-style universal denominator for the equation with the given
// cleared polynomial coefficients (z-power part excluded in Case Q).
APoly universal_denominator(const std::vector<APoly>& coeffs, const DiffField& fld);

// complete basis of y in k with L y = 0
SolutionSpace rational_solutions_scalar(const OreOp& L);

// all y in k with L y = g
struct ScalarSolutions {
  std::optional<RatFunc> particular;
  std::vector<RatFunc> homogeneous;
};
ScalarSolutions rational_solutions_scalar_inhom(const OreOp& L, const RatFunc& g);

// all Y in k^n with phi(Y) = A Y + rhs (rhs empty means homogeneous)
struct SystemSolutions {
  std::optional<VecK> particular;
  std::vector<VecK> homogeneous;
  // spec view: affine generators, each satisfying the equation
  SolutionSpace solution_space() const;
  bool any() const { return particular.has_value() || !homogeneous.empty(); }
};
SystemSolutions rational_solutions_system(const MatK& A, const VecK& rhs = {});

// f in k* with phi(f)/f = r, when one exists
std::optional<RatFunc> multiplicative_solve(const RatFunc& r, const FieldPtr& fld);

}  // namespace diffgal

#endif
