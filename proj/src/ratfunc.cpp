#include "asram/ratfunc.hpp"

namespace asram {

Place Place::finite(Poly pi) {
  const Fq& f = pi.field();
  if (pi.degree() < 1) fail(Errc::not_positive_degree, "a finite place needs degree >= 1");
  pi = pi.monic();
  if (!pi.irreducible()) fail(Errc::not_irreducible, "place polynomial is not irreducible: " + pi.str());
  return Place(f, std::move(pi), false);
}

Place Place::infinity(const Fq& f) { return Place(f, Poly::zero(f), true); }

Place place_validate(const Poly& pi) { return Place::finite(pi); }

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  invariant(&num_.field() == &den_.field(), "numerator and denominator over different fields");
  if (den_.is_zero()) fail(Errc::division_by_zero, "zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::one(num_.field());
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  FqElem linv = num_.field().inv(den_.leading());
  num_ = num_.scaled(linv);
  den_ = den_.scaled(linv);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) fail(Errc::division_by_zero, "division by the zero function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::pow(long long e) const {
  if (e < 0) {
    if (is_zero()) fail(Errc::division_by_zero, "negative power of zero");
    return RatFunc(den_, num_).pow(-e);
  }
  return RatFunc(num_.pow(e), den_.pow(e));
}

std::string RatFunc::str() const {
  if (is_zero()) return "0";
  auto wrap = [](const Poly& p) {
    // parenthesize any top-level sum, including a constant like g+1
    std::string s = p.str();
    int depth = 0;
    for (char c : s) {
      if (c == '(') ++depth;
      else if (c == ')') --depth;
      else if (c == '+' && depth == 0) return "(" + s + ")";
    }
    return s;
  };
  if (den_.degree() == 0) return num_.str();
  return wrap(num_) + "/" + wrap(den_);
}

namespace {

// multiplicity of pi in x, x != 0
long long ord_at(const Poly& x, const Poly& pi) {
  long long ord = 0;
  Poly cur = x;
  while (true) {
    auto [q, r] = Poly::divmod(cur, pi);
    if (!r.is_zero()) return ord;
    ++ord;
    cur = std::move(q);
  }
}

}  // namespace

Valuation valuation(const RatFunc& a, const Place& v) {
  if (a.is_zero()) return Valuation::infinite();
  if (v.is_infinity())
    return Valuation::finite(static_cast<long long>(a.den().degree()) - a.num().degree());
  return Valuation::finite(ord_at(a.num(), v.pi()) - ord_at(a.den(), v.pi()));
}

RatFunc infinity_substitute(const RatFunc& a) {
  if (a.is_zero()) return a;
  Poly rn = a.num().reversed();
  Poly rd = a.den().reversed();
  long long k = static_cast<long long>(a.den().degree()) - a.num().degree();
  if (k >= 0) return RatFunc(rn.shifted(static_cast<int>(k)), rd);
  return RatFunc(rn, rd.shifted(static_cast<int>(-k)));
}

LocalExpansion local_expand(const RatFunc& a, const Place& v, long long n) {
  if (v.is_infinity()) {
    const Fq& f = a.field();
    return local_expand(infinity_substitute(a), Place::finite(Poly::t(f)), n);
  }
  const Fq& f = a.field();
  ResidueField rf(f, v.pi());
  Valuation val = valuation(a, v);
  if (val.is_infinite() || val.value() >= n) return LocalExpansion{n, {}, n};

  LocalExpansion out;
  out.start = val.value();
  out.precision = n;
  RatFunc pi_fn{v.pi()};
  RatFunc b = a;
  for (long long e = out.start; e < n; ++e) {
    Valuation vb = valuation(b, v);
    if (vb.is_infinite() || vb.value() > e) {
      out.digits.push_back(rf.zero());
      continue;
    }
    // b * pi^-e has valuation 0; its residue is the digit
    RatFunc shifted = b * pi_fn.pow(-e);
    ResidueElem d = rf.div(rf.reduce(shifted.num()), rf.reduce(shifted.den()));
    out.digits.push_back(d);
    b = b - RatFunc(rf.lift(d)) * pi_fn.pow(e);
  }
  // b now holds the residual; the loop subtracted every digit below n
  Valuation rest = valuation(b, v);
  invariant(rest.is_infinite() || rest.value() >= n, "local expansion fails its precision bound");
  invariant(!out.digits.front().is_zero(), "leading expansion digit must be nonzero");
  return out;
}

std::pair<long long, ResidueElem> leading_digit(const RatFunc& a, const Place& v) {
  if (a.is_zero()) fail(Errc::zero_input, "leading digit of the zero function");
  if (v.is_infinity()) {
    const Fq& f = a.field();
    return leading_digit(infinity_substitute(a), Place::finite(Poly::t(f)));
  }
  long long val = valuation(a, v).value();
  ResidueField rf(a.field(), v.pi());
  RatFunc shifted = a * RatFunc(v.pi()).pow(-val);
  ResidueElem d = rf.div(rf.reduce(shifted.num()), rf.reduce(shifted.den()));
  invariant(!d.is_zero(), "leading digit vanished");
  return {val, d};
}

RatFunc trace_operator_apply(const RatFunc& y) {
  const Fq& f = y.field();
  RatFunc z = y;
  RatFunc x = y;
  for (int i = 1; i < f.r(); ++i) {
    x = x.pow(f.p());
    z = z + x;
  }
  return z;
}

}  // namespace asram
