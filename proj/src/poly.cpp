#include "asram/poly.hpp"

#include <algorithm>

namespace asram {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::t(const Fq& f) {
  Poly out(f);
  out.c_ = {f.zero(), f.one()};
  return out;
}

Poly Poly::constant(const FqElem& c) {
  Poly out(c.field());
  if (!c.is_zero()) out.c_ = {c};
  return out;
}

Poly Poly::from_coeffs(const Fq& f, std::vector<FqElem> c) {
  Poly out(f);
  out.c_ = std::move(c);
  out.trim();
  return out;
}

FqElem Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return f_->zero();
  return c_[i];
}

FqElem Poly::leading() const {
  invariant(!is_zero(), "leading coefficient of the zero polynomial");
  return c_.back();
}

bool Poly::is_monic() const { return !is_zero() && c_.back() == f_->one(); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_->inv(c_.back()));
}

Poly Poly::operator+(const Poly& o) const {
  invariant(f_ == o.f_, "polynomials over different fields");
  Poly out(*f_);
  size_t n = std::max(c_.size(), o.c_.size());
  out.c_.reserve(n);
  for (size_t i = 0; i < n; ++i) out.c_.push_back(coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i)));
  out.trim();
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  invariant(f_ == o.f_, "polynomials over different fields");
  Poly out(*f_);
  size_t n = std::max(c_.size(), o.c_.size());
  out.c_.reserve(n);
  for (size_t i = 0; i < n; ++i) out.c_.push_back(coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i)));
  out.trim();
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  invariant(f_ == o.f_, "polynomials over different fields");
  if (is_zero() || o.is_zero()) return Poly(*f_);
  Poly out(*f_);
  out.c_.assign(c_.size() + o.c_.size() - 1, f_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      out.c_[i + j] = out.c_[i + j] + c_[i] * o.c_[j];
  }
  out.trim();
  return out;
}

Poly Poly::operator-() const { return Poly(*f_) - *this; }

Poly Poly::scaled(const FqElem& c) const {
  if (c.is_zero()) return Poly(*f_);
  Poly out(*f_);
  out.c_.reserve(c_.size());
  for (const FqElem& x : c_) out.c_.push_back(x * c);
  out.trim();
  return out;
}

Poly Poly::shifted(int k) const {
  invariant(k >= 0, "negative shift");
  if (is_zero()) return *this;
  Poly out(*f_);
  out.c_.assign(static_cast<size_t>(k), f_->zero());
  out.c_.insert(out.c_.end(), c_.begin(), c_.end());
  return out;
}

Poly Poly::reversed() const {
  Poly out(*f_);
  out.c_.assign(c_.rbegin(), c_.rend());
  out.trim();
  return out;
}

Poly Poly::pow(long long e) const {
  invariant(e >= 0, "negative polynomial power");
  Poly acc = one(*f_);
  Poly b = *this;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  invariant(a.f_ == b.f_, "polynomials over different fields");
  if (b.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
  const Fq& f = *a.f_;
  Poly q(f), r = a;
  if (a.degree() >= b.degree()) q.c_.assign(a.degree() - b.degree() + 1, f.zero());
  FqElem linv = f.inv(b.leading());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    FqElem fac = r.leading() * linv;
    q.c_[shift] = fac;
    r = r - b.scaled(fac).shifted(shift);
  }
  q.trim();
  return {q, r};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::tuple<Poly, Poly, Poly> Poly::ext_gcd(const Poly& a, const Poly& b) {
  const Fq& f = a.field();
  Poly r0 = a, r1 = b;
  Poly u0 = one(f), u1 = zero(f), v0 = zero(f), v1 = one(f);
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r2);
    Poly u2 = u0 - q * u1;
    u0 = std::move(u1);
    u1 = std::move(u2);
    Poly v2 = v0 - q * v1;
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (!r0.is_zero()) {
    FqElem linv = f.inv(r0.leading());
    r0 = r0.scaled(linv);
    u0 = u0.scaled(linv);
    v0 = v0.scaled(linv);
  }
  return {r0, u0, v0};
}

namespace {

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& base, long long e, const Poly& m) {
  Poly acc = Poly::one(base.field());
  Poly b = base % m;
  while (e > 0) {
    if (e & 1) acc = mulmod(acc, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return acc;
}

}  // namespace

bool Poly::irreducible() const {
  int d = degree();
  if (d < 1) fail(Errc::not_positive_degree, "irreducibility needs degree >= 1");
  const Fq& f = *f_;
  Poly tp = t(f) % *this;
  Poly x = tp;
  for (int i = 1; i <= d; ++i) {
    x = powmod(x, f.q(), *this);
    if (i <= d / 2 && gcd(*this, x - tp).degree() != 0) return false;
  }
  return x == tp;
}

bool Poly::operator==(const Poly& o) const {
  invariant(f_ == o.f_, "polynomials over different fields");
  return c_ == o.c_;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const FqElem& c = c_[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    std::string cs = c.str();
    if (i == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") {
      // products with multi-term coefficients need parentheses to reparse
      out += (cs.find('+') != std::string::npos) ? "(" + cs + ")*" : cs + "*";
    }
    out += (i == 1) ? var : var + "^" + std::to_string(i);
  }
  return out;
}

Poly monic_poly_from_rank(const Fq& f, int degree, long long rank) {
  invariant(degree >= 0, "negative degree");
  std::vector<FqElem> c;
  c.reserve(degree + 1);
  for (int i = 0; i < degree; ++i) {
    c.push_back(f.from_rank(rank % f.q()));
    rank /= f.q();
  }
  invariant(rank == 0, "rank out of range for degree");
  c.push_back(f.one());
  return Poly::from_coeffs(f, std::move(c));
}

}  // namespace asram
