#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "asram/gf.hpp"

namespace asram {

// Dense polynomial over F_q, coefficients low-to-high with no trailing
// zeros.  deg 0 = nonzero constant; the zero polynomial has degree -1.
class Poly {
 public:
  explicit Poly(const Fq& f) : f_(&f) {}  // zero polynomial

  static Poly zero(const Fq& f) { return Poly(f); }
  static Poly one(const Fq& f) { return constant(f.one()); }
  static Poly t(const Fq& f);
  static Poly constant(const FqElem& c);
  static Poly from_coeffs(const Fq& f, std::vector<FqElem> c);

  const Fq& field() const { return *f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FqElem>& coeffs() const { return c_; }
  FqElem coeff(int i) const;  // zero beyond the degree
  FqElem leading() const;     // requires a nonzero polynomial
  bool is_monic() const;
  Poly monic() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const FqElem& c) const;
  Poly shifted(int k) const;  // multiply by t^k, k >= 0
  Poly reversed() const;      // t^deg * f(1/t)
  Poly pow(long long e) const;  // e >= 0

  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  Poly operator%(const Poly& o) const { return divmod(*this, o).second; }
  Poly operator/(const Poly& o) const { return divmod(*this, o).first; }

  static Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0
  // (g, u, v) with u*a + v*b = g and g the monic gcd
  static std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b);

  // Deterministic irreducibility test over F_q via q-power Frobenius gcds;
  // requires degree >= 1.
  bool irreducible() const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string str(const std::string& var = "t") const;

 private:
  void trim();

  const Fq* f_;
  std::vector<FqElem> c_;
};

// Monic polynomial of the given degree whose lower-coefficient vector
// decodes the rank in base q (constant term least significant).
Poly monic_poly_from_rank(const Fq& f, int degree, long long rank);

}  // namespace asram
