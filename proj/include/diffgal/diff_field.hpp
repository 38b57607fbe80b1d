#ifndef DIFFGAL_DIFF_FIELD_HPP
#define DIFFGAL_DIFF_FIELD_HPP

#include <diffgal/ratfunc.hpp>

#include <memory>
#include <optional>
#include <set>

namespace diffgal {

enum class CaseKind { S, Q };

// The difference field (k, phi): rational functions in the working variable
// with the shift z -> z+h (Case S) or the q-dilation z -> qz (Case Q).
// Ramification ell means the working variable w satisfies z = w^ell; it is
// applied by substitution up front, so the whole engine runs over plain C(w).
class DiffField {
 public:
  static std::shared_ptr<DiffField> make_shift(std::shared_ptr<Tower> tower, AlgNum h,
                                               int ramification = 1);
  static std::shared_ptr<DiffField> make_qdiff(std::shared_ptr<Tower> tower, AlgNum q,
                                               int ramification = 1);

  CaseKind kind() const { return kind_; }
  const AlgNum& param() const { return param_; }  // h or q in the working variable
  int ramification() const { return ram_; }
  const std::shared_ptr<Tower>& tower() const { return tower_; }

  // The same field with phi replaced by phi^n (h -> n*h, q -> q^n).
  std::shared_ptr<DiffField> iterated(int n) const;

  bool same_field(const DiffField& o) const {
    return kind_ == o.kind_ && param_ == o.param_ && ram_ == o.ram_ &&
           tower_.get() == o.tower_.get();
  }

 private:
  CaseKind kind_;
  AlgNum param_;
  int ram_ = 1;
  std::shared_ptr<Tower> tower_;
};

using FieldPtr = std::shared_ptr<DiffField>;

// phi^power applied to polynomials and rational functions
APoly phi_poly(const APoly& p, const DiffField& fld, long power = 1);
RatFunc phi(const RatFunc& f, const DiffField& fld, long power = 1);

// the derivation paired with phi: d/dz (S), z*d/dz (Q)
RatFunc derive(const RatFunc& f, const DiffField& fld);

// Exact discrete log: j with a = q^j, if any.
std::optional<long> discrete_log(const AlgNum& a, const AlgNum& q);

// k with a*q^k a root of unity; returns (k, torsion order) if found.
std::optional<std::pair<long, long>> torsion_shift(const AlgNum& a, const AlgNum& q);

// Signed root-collision distances: all j in Z with gcd(p, phi^j(r))
// nonconstant.  p, r nonzero.
std::vector<long> signed_dispersion(const APoly& p, const APoly& r, const DiffField& fld);

// Spec operation: absolute collision distances { |j| } as a set.
std::set<long> dispersion(const APoly& p, const APoly& r, const DiffField& fld);

}  // namespace diffgal

#endif
