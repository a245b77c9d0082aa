#include "asram/residue.hpp"

namespace asram {

ResidueField::ResidueField(const Fq& f, Poly pi) : f_(&f), pi_(std::move(pi)) {
  invariant(&pi_.field() == f_, "place polynomial over the wrong field");
  invariant(pi_.is_monic() && pi_.degree() >= 1, "place polynomial must be monic of degree >= 1");
  deg_ = pi_.degree();
  size_ = 1;
  for (int i = 0; i < deg_; ++i) {
    invariant(size_ <= (1LL << 50) / f.q(), "residue field too large");
    size_ *= f.q();
  }
}

ResidueElem ResidueField::zero() const {
  return ResidueElem{std::vector<FqElem>(deg_, f_->zero())};
}

ResidueElem ResidueField::one() const { return reduce(Poly::one(*f_)); }

ResidueElem ResidueField::reduce(const Poly& x) const {
  Poly r = x % pi_;
  std::vector<FqElem> c;
  c.reserve(deg_);
  for (int i = 0; i < deg_; ++i) c.push_back(r.coeff(i));
  return ResidueElem{std::move(c)};
}

Poly ResidueField::lift(const ResidueElem& e) const {
  invariant(static_cast<int>(e.c.size()) == deg_, "residue element of the wrong width");
  return Poly::from_coeffs(*f_, e.c);
}

ResidueElem ResidueField::add(const ResidueElem& a, const ResidueElem& b) const {
  ResidueElem out = a;
  for (int i = 0; i < deg_; ++i) out.c[i] = out.c[i] + b.c[i];
  return out;
}

ResidueElem ResidueField::sub(const ResidueElem& a, const ResidueElem& b) const {
  ResidueElem out = a;
  for (int i = 0; i < deg_; ++i) out.c[i] = out.c[i] - b.c[i];
  return out;
}

ResidueElem ResidueField::neg(const ResidueElem& a) const { return sub(zero(), a); }

ResidueElem ResidueField::mul(const ResidueElem& a, const ResidueElem& b) const {
  return reduce(lift(a) * lift(b));
}

ResidueElem ResidueField::inv(const ResidueElem& a) const {
  if (a.is_zero()) fail(Errc::division_by_zero, "inverse of zero residue");
  auto [g, u, v] = Poly::ext_gcd(lift(a), pi_);
  invariant(g.degree() == 0, "place polynomial shares a factor with a nonzero residue");
  return reduce(u);
}

ResidueElem ResidueField::div(const ResidueElem& a, const ResidueElem& b) const {
  return mul(a, inv(b));
}

ResidueElem ResidueField::pow(const ResidueElem& a, long long e) const {
  invariant(e >= 0, "negative residue power");
  ResidueElem acc = one();
  ResidueElem b = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, b);
    b = mul(b, b);
    e >>= 1;
  }
  return acc;
}

ResidueElem ResidueField::pth_root(const ResidueElem& a) const {
  ResidueElem x = a;
  int steps = f_->r() * deg_ - 1;
  for (int i = 0; i < steps; ++i) x = frobenius(x);
  return x;
}

int ResidueField::trace_to_prime(const ResidueElem& a) const {
  ResidueElem acc = a;
  ResidueElem x = a;
  int steps = f_->r() * deg_;
  for (int i = 1; i < steps; ++i) {
    x = frobenius(x);
    acc = add(acc, x);
  }
  for (int i = 1; i < deg_; ++i)
    invariant(acc.c[i].is_zero(), "composite trace left the prime field");
  invariant(acc.c[0].in_prime_field(), "composite trace left the prime field");
  return acc.c[0].coeffs()[0];
}

std::optional<ResidueElem> ResidueField::artin_schreier_solve(const ResidueElem& d) const {
  for (long long rk = 0; rk < size_; ++rk) {
    ResidueElem c = from_rank(rk);
    if (sub(frobenius(c), c) == d) return c;
  }
  return std::nullopt;
}

ResidueElem ResidueField::from_rank(long long rank) const {
  invariant(rank >= 0 && rank < size_, "residue rank out of range");
  std::vector<FqElem> c;
  c.reserve(deg_);
  for (int i = 0; i < deg_; ++i) {
    c.push_back(f_->from_rank(rank % f_->q()));
    rank /= f_->q();
  }
  return ResidueElem{std::move(c)};
}

long long ResidueField::rank(const ResidueElem& e) const {
  long long out = 0;
  for (int i = deg_ - 1; i >= 0; --i) out = out * f_->q() + f_->rank(e.c[i]);
  return out;
}

}  // namespace asram
