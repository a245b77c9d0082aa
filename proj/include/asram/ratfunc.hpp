#pragma once

#include <string>
#include <utility>
#include <vector>

#include "asram/residue.hpp"

namespace asram {

// Value of a discrete valuation: an integer or +infinity (only the zero
// function takes the infinite value).
class Valuation {
 public:
  static Valuation finite(long long v) { return Valuation(v, false); }
  static Valuation infinite() { return Valuation(0, true); }

  bool is_infinite() const { return inf_; }
  long long value() const {
    invariant(!inf_, "finite value of an infinite valuation");
    return v_;
  }

  bool operator==(const Valuation& o) const {
    return inf_ == o.inf_ && (inf_ || v_ == o.v_);
  }
  bool operator!=(const Valuation& o) const { return !(*this == o); }
  bool operator<(const Valuation& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return v_ < o.v_;
  }
  bool operator>(const Valuation& o) const { return o < *this; }
  bool operator>=(const Valuation& o) const { return !(*this < o); }
  bool operator<=(const Valuation& o) const { return !(o < *this); }

  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  Valuation(long long v, bool inf) : v_(v), inf_(inf) {}
  long long v_;
  bool inf_;
};

// A place of F_q(t): either the place of a monic irreducible polynomial or
// the degree-1 place at infinity.
class Place {
 public:
  // Normalizes to monic and checks irreducibility.
  static Place finite(Poly pi);
  static Place infinity(const Fq& f);

  bool is_infinity() const { return inf_; }
  const Poly& pi() const {
    invariant(!inf_, "no polynomial at the infinite place");
    return pi_;
  }
  const Fq& field() const { return *f_; }
  int degree() const { return inf_ ? 1 : pi_.degree(); }
  std::string str() const { return inf_ ? "inf" : pi_.str(); }

 private:
  Place(const Fq& f, Poly pi, bool inf) : f_(&f), pi_(std::move(pi)), inf_(inf) {}
  const Fq* f_;
  Poly pi_;
  bool inf_;
};

// Validated constructor for finite places (alias for Place::finite).
Place place_validate(const Poly& pi);

// Element of E = F_q(t) in reduced form: gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  static RatFunc zero(const Fq& f) { return RatFunc(Poly::zero(f)); }
  static RatFunc one(const Fq& f) { return RatFunc(Poly::one(f)); }
  static RatFunc t(const Fq& f) { return RatFunc(Poly::t(f)); }
  static RatFunc constant(const FqElem& c) { return RatFunc(Poly::constant(c)); }

  const Fq& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc pow(long long e) const;  // negative e inverts

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Poly num_, den_;
};

Valuation valuation(const RatFunc& a, const Place& v);

// Truncated pi-adic expansion: a = sum digits[i] * pi^(start + i) + O(pi^precision),
// digits over the residue field.  The zero expansion has empty digits and
// start = precision.
struct LocalExpansion {
  long long start = 0;
  std::vector<ResidueElem> digits;
  long long precision = 0;
};

// Digits of a at v up to but excluding exponent n.  At the infinite place
// the expansion is taken in s = 1/t after substitution.
LocalExpansion local_expand(const RatFunc& a, const Place& v, long long n);

// (valuation, first nonzero digit); requires a != 0.
std::pair<long long, ResidueElem> leading_digit(const RatFunc& a, const Place& v);

// The involution a(t) -> a(1/t), exchanging the infinite place with the
// t-adic one: valuation(a, inf) = valuation(substituted, t).
RatFunc infinity_substitute(const RatFunc& a);

// z = y + y^p + ... + y^(p^(r-1)); satisfies z^p - z = y^q - y.
RatFunc trace_operator_apply(const RatFunc& y);

}  // namespace asram
