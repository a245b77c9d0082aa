#include "asram/gf.hpp"

#include <algorithm>

namespace asram {

namespace {

// Dense polynomials over F_p as int vectors, low-to-high, trimmed.
using IVec = std::vector<int>;

void trim(IVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int inv_mod_p(int a, int p) {
  // extended Euclid on integers
  int t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    int qq = r / nr;
    t -= qq * nt;
    std::swap(t, nt);
    r -= qq * nr;
    std::swap(r, nr);
  }
  return ((t % p) + p) % p;
}

IVec add_fp(const IVec& a, const IVec& b, int p) {
  IVec out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    int v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    out[i] = v % p;
  }
  trim(out);
  return out;
}

IVec sub_fp(const IVec& a, const IVec& b, int p) {
  IVec out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    int v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    out[i] = ((v % p) + p) % p;
  }
  trim(out);
  return out;
}

IVec mul_fp(const IVec& a, const IVec& b, int p) {
  if (a.empty() || b.empty()) return {};
  IVec out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

// remainder of a by m; m need not be monic
IVec rem_fp(IVec a, const IVec& m, int p) {
  int linv = inv_mod_p(m.back(), p);
  while (a.size() >= m.size()) {
    int f = static_cast<int>((static_cast<long long>(a.back()) * linv) % p);
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      long long v = a[shift + i] - static_cast<long long>(f) * m[i];
      a[shift + i] = static_cast<int>(((v % p) + p) % p);
    }
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

IVec gcd_fp(IVec a, IVec b, int p) {
  while (!b.empty()) {
    IVec r = rem_fp(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    int linv = inv_mod_p(a.back(), p);
    for (int& c : a) c = static_cast<int>((static_cast<long long>(c) * linv) % p);
  }
  return a;
}

// (g, u) with u*a = g mod m and g the monic gcd(a, m)
std::pair<IVec, IVec> half_ext_gcd_fp(IVec a, IVec m, int p) {
  IVec r0 = std::move(a), r1 = std::move(m);
  IVec u0 = {1}, u1 = {};
  while (!r1.empty()) {
    // one division step of r0 by r1
    IVec q;
    {
      IVec rem = r0;
      int linv = inv_mod_p(r1.back(), p);
      if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
      while (rem.size() >= r1.size()) {
        int f = static_cast<int>((static_cast<long long>(rem.back()) * linv) % p);
        size_t shift = rem.size() - r1.size();
        q[shift] = f;
        for (size_t i = 0; i < r1.size(); ++i) {
          long long v = rem[shift + i] - static_cast<long long>(f) * r1[i];
          rem[shift + i] = static_cast<int>(((v % p) + p) % p);
        }
        trim(rem);
        if (rem.empty()) break;
      }
      trim(q);
      r0 = std::move(rem);
    }
    std::swap(r0, r1);  // r0 now the old r1, r1 the remainder
    IVec u2 = sub_fp(u0, mul_fp(q, u1, p), p);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (!r0.empty()) {
    int linv = inv_mod_p(r0.back(), p);
    for (int& c : r0) c = static_cast<int>((static_cast<long long>(c) * linv) % p);
    for (int& c : u0) c = static_cast<int>((static_cast<long long>(c) * linv) % p);
  }
  return {r0, u0};
}

IVec powmod_fp(const IVec& base, long long e, const IVec& m, int p) {
  IVec acc = {1};
  IVec b = rem_fp(base, m, p);
  long long k = e;
  while (k > 0) {
    if (k & 1) acc = rem_fp(mul_fp(acc, b, p), m, p);
    b = rem_fp(mul_fp(b, b, p), m, p);
    k >>= 1;
  }
  return acc;
}

// gcd-based test: f irreducible iff gcd(f, t^(p^i) - t) = 1 for i <= deg/2
// and f divides t^(p^deg) - t.
bool irreducible_fp(const IVec& f, int p) {
  int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  IVec t = rem_fp(IVec{0, 1}, f, p);
  IVec x = t;
  for (int i = 1; i <= d; ++i) {
    x = powmod_fp(x, p, f, p);
    if (i <= d / 2) {
      IVec g = gcd_fp(f, sub_fp(x, t, p), p);
      if (g.size() != 1) return false;
    }
  }
  return x == t;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void check_pr(int p, int r) {
  if (!is_prime(p)) fail(Errc::invalid_prime, "p must be prime, got " + std::to_string(p));
  if (r < 1) fail(Errc::invalid_parameter, "extension degree r must be >= 1");
  // keep q within comfortable integer range; the library targets small fields
  long long q = 1;
  for (int i = 0; i < r; ++i) {
    q *= p;
    if (q > (1LL << 40)) fail(Errc::invalid_parameter, "field size p^r too large");
  }
}

}  // namespace

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::zero_input: return "ZeroInput";
    case Errc::norm_not_one: return "NormNotOne";
    case Errc::not_irreducible: return "NotIrreducible";
    case Errc::not_positive_degree: return "NotPositiveDegree";
    case Errc::invalid_prime: return "InvalidPrime";
    case Errc::invalid_parameter: return "InvalidParameter";
    case Errc::invalid_d: return "InvalidD";
    case Errc::gamma_not_norm_one: return "GammaNotNormOne";
    case Errc::gamma_is_one: return "GammaIsOne";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::search_space_too_large: return "SearchSpaceTooLarge";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::unknown_symbol: return "UnknownSymbol";
    case Errc::internal_invariant: return "InternalInvariant";
  }
  return "Unknown";
}

FieldSpec modulus_select(int p, int r) {
  check_pr(p, r);
  long long count = 1;
  for (int i = 0; i < r; ++i) count *= p;
  for (long long k = 0; k < count; ++k) {
    IVec coeffs(r + 1, 0);
    long long v = k;
    for (int i = 0; i < r; ++i) {
      coeffs[i] = static_cast<int>(v % p);
      v /= p;
    }
    coeffs[r] = 1;
    if (irreducible_fp(coeffs, p)) return FieldSpec{p, r, coeffs};
  }
  fail(Errc::internal_invariant, "no irreducible modulus found");  // unreachable
}

FieldSpec make_field_spec(int p, int r, std::vector<int> modulus) {
  check_pr(p, r);
  for (int& c : modulus) c = ((c % p) + p) % p;
  trim(modulus);
  if (static_cast<int>(modulus.size()) != r + 1 || modulus.back() != 1)
    fail(Errc::not_irreducible, "modulus must be monic of degree r");
  if (!irreducible_fp(modulus, p)) fail(Errc::not_irreducible, "modulus is not irreducible");
  return FieldSpec{p, r, modulus};
}

const Fq& FqElem::field() const {
  if (f_ == nullptr) fail(Errc::internal_invariant, "use of detached field element");
  return *f_;
}

bool FqElem::is_zero() const {
  for (int v : c_)
    if (v != 0) return false;
  return true;
}

bool FqElem::in_prime_field() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

FqElem FqElem::operator+(const FqElem& o) const { return field().add(*this, o); }
FqElem FqElem::operator-(const FqElem& o) const { return field().sub(*this, o); }
FqElem FqElem::operator*(const FqElem& o) const { return field().mul(*this, o); }
FqElem FqElem::operator/(const FqElem& o) const { return field().div(*this, o); }
FqElem FqElem::operator-() const { return field().neg(*this); }

bool FqElem::operator==(const FqElem& o) const {
  invariant(f_ == o.f_, "comparing elements of different fields");
  return c_ == o.c_;
}

std::string FqElem::str() const {
  std::string out;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c_[i]);
    } else {
      if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
      out += (i == 1) ? "g" : "g^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

Fq::Fq(const FieldSpec& spec) : spec_(make_field_spec(spec.p, spec.r, spec.modulus)) {
  q_ = 1;
  for (int i = 0; i < spec_.r; ++i) q_ *= spec_.p;
}

FqElem Fq::zero() const { return make(std::vector<int>(spec_.r, 0)); }

FqElem Fq::one() const { return from_int(1); }

FqElem Fq::gen() const {
  std::vector<int> c(spec_.r, 0);
  if (spec_.r > 1) c[1] = 1;  // for r = 1 the generator is the modulus root 0
  return make(c);
}

FqElem Fq::from_coeffs(std::vector<int> c) const {
  IVec v = std::move(c);
  for (int& x : v) x = ((x % spec_.p) + spec_.p) % spec_.p;
  trim(v);
  if (static_cast<int>(v.size()) > spec_.r) v = rem_fp(v, spec_.modulus, spec_.p);
  v.resize(spec_.r, 0);
  return make(v);
}

FqElem Fq::from_int(long long x) const {
  std::vector<int> c(spec_.r, 0);
  c[0] = static_cast<int>(((x % spec_.p) + spec_.p) % spec_.p);
  return make(c);
}

FqElem Fq::from_rank(long long rank) const {
  invariant(rank >= 0 && rank < q_, "element rank out of range");
  std::vector<int> c(spec_.r, 0);
  for (int i = 0; i < spec_.r; ++i) {
    c[i] = static_cast<int>(rank % spec_.p);
    rank /= spec_.p;
  }
  return make(c);
}

long long Fq::rank(const FqElem& x) const {
  long long out = 0;
  for (int i = spec_.r - 1; i >= 0; --i) out = out * spec_.p + x.coeffs()[i];
  return out;
}

namespace {
void check_field(const Fq* f, const FqElem& a, const FqElem& b) {
  invariant(&a.field() == f && &b.field() == f, "elements of different fields");
}
}  // namespace

FqElem Fq::add(const FqElem& a, const FqElem& b) const {
  check_field(this, a, b);
  IVec v = add_fp(a.coeffs(), b.coeffs(), spec_.p);
  v.resize(spec_.r, 0);
  return make(v);
}

FqElem Fq::sub(const FqElem& a, const FqElem& b) const {
  check_field(this, a, b);
  IVec v = sub_fp(a.coeffs(), b.coeffs(), spec_.p);
  v.resize(spec_.r, 0);
  return make(v);
}

FqElem Fq::neg(const FqElem& a) const { return sub(zero(), a); }

FqElem Fq::mul(const FqElem& a, const FqElem& b) const {
  check_field(this, a, b);
  IVec v = rem_fp(mul_fp(a.coeffs(), b.coeffs(), spec_.p), spec_.modulus, spec_.p);
  v.resize(spec_.r, 0);
  return make(v);
}

FqElem Fq::inv(const FqElem& a) const {
  if (a.is_zero()) fail(Errc::division_by_zero, "inverse of zero field element");
  IVec ac = a.coeffs();
  trim(ac);
  auto [g, u] = half_ext_gcd_fp(ac, spec_.modulus, spec_.p);
  invariant(g.size() == 1 && g[0] == 1, "modulus shares a factor with a nonzero element");
  IVec v = rem_fp(u, spec_.modulus, spec_.p);
  v.resize(spec_.r, 0);
  return make(v);
}

FqElem Fq::div(const FqElem& a, const FqElem& b) const { return mul(a, inv(b)); }

FqElem Fq::pow(const FqElem& a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  FqElem acc = one();
  FqElem b = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, b);
    b = mul(b, b);
    e >>= 1;
  }
  return acc;
}

FqElem Fq::pth_root(const FqElem& a) const {
  FqElem x = a;
  for (int i = 0; i < spec_.r - 1; ++i) x = frobenius(x);
  return x;
}

int Fq::trace(const FqElem& a) const {
  FqElem acc = a;
  FqElem x = a;
  for (int i = 1; i < spec_.r; ++i) {
    x = frobenius(x);
    acc = add(acc, x);
  }
  invariant(acc.in_prime_field(), "trace left the prime field");
  return acc.coeffs()[0];
}

int Fq::norm(const FqElem& a) const {
  if (a.is_zero()) return 0;
  FqElem n = pow(a, (q_ - 1) / (spec_.p - 1));
  invariant(n.in_prime_field(), "norm left the prime field");
  return n.coeffs()[0];
}

FqElem Fq::hilbert90(const FqElem& gamma) const {
  invariant(&gamma.field() == this, "element of a different field");
  if (gamma.is_zero()) fail(Errc::zero_input, "hilbert90 of zero");
  if (norm(gamma) != 1) fail(Errc::norm_not_one, "hilbert90 requires norm 1, got norm " +
                                                     std::to_string(norm(gamma)));
  for (long long rk = 1; rk < q_; ++rk) {
    FqElem d0 = from_rank(rk);
    if (div(d0, frobenius(d0)) == gamma) return d0;
  }
  fail(Errc::internal_invariant, "no hilbert90 solution for a norm-1 element");
}

std::vector<FqElem> Fq::trace_kernel_basis() const {
  std::vector<FqElem> basis;
  // pivot[i], when nonempty, is a row with leading position i scaled to 1
  std::vector<std::vector<int>> pivot(spec_.r);
  for (long long rk = 1; rk < q_ && static_cast<int>(basis.size()) < spec_.r - 1; ++rk) {
    FqElem x = from_rank(rk);
    if (trace(x) != 0) continue;
    std::vector<int> row = x.coeffs();
    int lead = -1;
    for (int i = 0; i < spec_.r; ++i) {
      if (row[i] == 0) continue;
      if (pivot[i].empty()) {
        lead = i;
        break;
      }
      int f = row[i];
      for (int j = 0; j < spec_.r; ++j)
        row[j] = ((row[j] - f * pivot[i][j]) % spec_.p + spec_.p) % spec_.p;
    }
    if (lead < 0) continue;  // dependent on earlier kernel elements
    int linv = inv_mod_p(row[lead], spec_.p);
    for (int& v : row) v = static_cast<int>((static_cast<long long>(v) * linv) % spec_.p);
    pivot[lead] = row;
    basis.push_back(x);
  }
  invariant(static_cast<int>(basis.size()) == spec_.r - 1, "trace kernel has the wrong dimension");
  return basis;
}

}  // namespace asram
