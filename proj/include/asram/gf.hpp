#pragma once

#include <string>
#include <vector>

#include "asram/error.hpp"

namespace asram {

// Parameters of F_q, q = p^r: the characteristic, the extension degree and
// the monic irreducible modulus over F_p (coefficients low-to-high) that
// fixes the power-basis presentation in the generator g.
struct FieldSpec {
  int p = 2;
  int r = 1;
  std::vector<int> modulus;  // length r + 1, monic
};

// Deterministic default modulus: among the monic irreducible degree-r
// polynomials over F_p, the one whose coefficient vector reads as the
// smallest base-p integer (constant term least significant).
FieldSpec modulus_select(int p, int r);

// Validated user override.  Coefficients are reduced mod p; the result must
// be monic of degree r and irreducible.
FieldSpec make_field_spec(int p, int r, std::vector<int> modulus);

class Fq;

// Immutable element of F_q, stored as its coordinate vector in the power
// basis of g (length r, entries in [0, p)).  Elements keep a pointer to
// their field; operands of a binary operation must come from the same Fq
// instance.
class FqElem {
 public:
  FqElem() = default;  // detached; unusable until assigned from a field

  const std::vector<int>& coeffs() const { return c_; }
  const Fq& field() const;
  bool is_zero() const;
  bool in_prime_field() const;

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem operator-() const;
  bool operator==(const FqElem& o) const;
  bool operator!=(const FqElem& o) const { return !(*this == o); }

  // Polynomial expression in g, e.g. "g^2+2*g+1"; coefficients never carry
  // signs, so output parses back through the expression grammar.
  std::string str() const;

 private:
  friend class Fq;
  FqElem(const Fq* f, std::vector<int> c) : f_(f), c_(std::move(c)) {}

  const Fq* f_ = nullptr;
  std::vector<int> c_;
};

// Arithmetic context for F_q.  All state is fixed at construction; every
// operation is const, so one instance may be shared across threads.
// Elements point back at the context and must not outlive it.
class Fq {
 public:
  explicit Fq(const FieldSpec& spec);
  Fq(int p, int r) : Fq(modulus_select(p, r)) {}
  Fq(const Fq&) = delete;
  Fq& operator=(const Fq&) = delete;

  int p() const { return spec_.p; }
  int r() const { return spec_.r; }
  long long q() const { return q_; }
  const FieldSpec& spec() const { return spec_; }

  FqElem zero() const;
  FqElem one() const;
  FqElem gen() const;                          // the class of g
  FqElem from_coeffs(std::vector<int> c) const;  // entries reduced mod p
  FqElem from_int(long long v) const;            // image in the prime field
  // Base-p encoding of the coefficient vector, constant term least
  // significant; fixes the enumeration order used throughout.
  FqElem from_rank(long long rank) const;
  long long rank(const FqElem& x) const;

  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem inv(const FqElem& a) const;
  FqElem div(const FqElem& a, const FqElem& b) const;
  FqElem pow(const FqElem& a, long long e) const;  // e < 0 inverts first

  FqElem frobenius(const FqElem& a) const { return pow(a, spec_.p); }
  // Inverse of Frobenius; x -> x^(p^(r-1)).  Bijective, so total.
  FqElem pth_root(const FqElem& a) const;

  int trace(const FqElem& a) const;  // to F_p
  int norm(const FqElem& a) const;   // to F_p, multiplicative

  // The solution d0 of d0 / d0^p = gamma, by ascending-rank scan; exists for
  // every gamma of norm 1.
  FqElem hilbert90(const FqElem& gamma) const;

  // F_p-basis of the kernel of trace, ascending-rank greedy; size r - 1.
  std::vector<FqElem> trace_kernel_basis() const;

 private:
  FqElem make(std::vector<int> c) const { return FqElem(this, std::move(c)); }

  FieldSpec spec_;
  long long q_;
};

}  // namespace asram
