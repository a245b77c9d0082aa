#pragma once

#include <optional>
#include <vector>

#include "asram/poly.hpp"

namespace asram {

// Element of F_q[t]/(pi): coefficients of the canonical representative of
// degree < deg(pi), low-to-high, always of full length.
struct ResidueElem {
  std::vector<FqElem> c;

  bool operator==(const ResidueElem& o) const { return c == o.c; }
  bool operator!=(const ResidueElem& o) const { return !(*this == o); }
  bool is_zero() const {
    for (const FqElem& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
};

// Arithmetic context for the residue field F_q[t]/(pi) at a finite place.
// pi must be monic irreducible (the Place factory guarantees this).  All
// operations are const; the residue tower is never flattened into a single
// extension of F_p.
class ResidueField {
 public:
  ResidueField(const Fq& f, Poly pi);

  const Fq& base() const { return *f_; }
  const Poly& pi() const { return pi_; }
  int degree() const { return deg_; }
  long long size() const { return size_; }  // q^deg

  ResidueElem zero() const;
  ResidueElem one() const;
  ResidueElem reduce(const Poly& x) const;
  Poly lift(const ResidueElem& e) const;  // canonical representative, deg < deg(pi)

  ResidueElem add(const ResidueElem& a, const ResidueElem& b) const;
  ResidueElem sub(const ResidueElem& a, const ResidueElem& b) const;
  ResidueElem neg(const ResidueElem& a) const;
  ResidueElem mul(const ResidueElem& a, const ResidueElem& b) const;
  ResidueElem inv(const ResidueElem& a) const;
  ResidueElem div(const ResidueElem& a, const ResidueElem& b) const;
  ResidueElem pow(const ResidueElem& a, long long e) const;  // e >= 0

  ResidueElem frobenius(const ResidueElem& a) const { return pow(a, f_->p()); }
  ResidueElem pth_root(const ResidueElem& a) const;  // inverse Frobenius

  // Composite trace through the tower down to F_p.
  int trace_to_prime(const ResidueElem& a) const;

  // Smallest-rank c with c^p - c = d, if the equation has a solution
  // (equivalently trace_to_prime(d) = 0).
  std::optional<ResidueElem> artin_schreier_solve(const ResidueElem& d) const;

  // Ascending enumeration: rank written base q over coefficient ranks,
  // constant coefficient least significant.
  ResidueElem from_rank(long long rank) const;
  long long rank(const ResidueElem& e) const;

 private:
  const Fq* f_;
  Poly pi_;
  int deg_;
  long long size_;
};

}  // namespace asram
