#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>

#include "asram/asred.hpp"
#include "test_util.hpp"

using namespace asram;

namespace {

// the coset-membership identity every result must satisfy
void check_witness(const Fq& f, const RatFunc& a, const Place& v, const MValResult& r) {
  CHECK(r.witness_b == a + r.witness_h.pow(f.p()) - r.witness_h);
  Valuation val = valuation(r.witness_b, v);
  switch (r.kind) {
    case MValKind::negative:
      CHECK(val == Valuation::finite(r.m));
      CHECK(r.m < 0);
      CHECK(r.m % f.p() != 0);
      break;
    case MValKind::zero:
      CHECK(val == Valuation::finite(0));
      break;
    case MValKind::infinite:
      CHECK(val >= Valuation::finite(1));
      break;
  }
}

}  // namespace

TEST_CASE("reduce_once clears one p-divisible pole digit") {
  Fq f(2, 1);
  Poly t = Poly::t(f);
  Place vt = Place::finite(t);
  RatFunc a(Poly::one(f), t * t);
  auto [b, h] = reduce_once(a, vt);
  CHECK(h == RatFunc(Poly::one(f), t));
  CHECK(b == RatFunc(Poly::one(f), t));
  CHECK(b == a - (h.pow(2) - h));
  // preconditions
  CHECK_THROWS_AS(reduce_once(RatFunc(Poly::one(f), t), vt), Error);  // coprime pole
  CHECK_THROWS_AS(reduce_once(RatFunc(t), vt), Error);                // no pole
  CHECK_THROWS_AS(reduce_once(RatFunc::zero(f), vt), Error);
  try {
    reduce_once(RatFunc(t), vt);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precondition_violated);
  }
}

TEST_CASE("m_value on fixed F2 inputs") {
  Fq f(2, 1);
  Poly t = Poly::t(f);
  Place vt = Place::finite(t);
  RatFunc one = RatFunc::one(f);

  MValResult r = m_value(RatFunc(Poly::one(f), t * t * t), vt);
  CHECK(r.kind == MValKind::negative);
  CHECK(r.m == -3);
  CHECK(r.witness_h == RatFunc::zero(f));
  check_witness(f, RatFunc(Poly::one(f), t * t * t), vt, r);

  r = m_value(RatFunc(Poly::one(f), t * t), vt);
  CHECK(r.kind == MValKind::negative);
  CHECK(r.m == -1);
  CHECK(r.witness_b == RatFunc(Poly::one(f), t));

  // 1/t^4 reduces through 1/t^2 to 1/t
  RatFunc a4(Poly::one(f), t.pow(4));
  ReductionTrace trace;
  r = m_value(a4, vt, &trace);
  CHECK(r.kind == MValKind::negative);
  CHECK(r.m == -1);
  CHECK(r.witness_h == RatFunc(Poly::one(f), t * t) + RatFunc(Poly::one(f), t));
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].before_valuation == -4);
  CHECK(trace.steps[1].before_valuation == -2);
  check_witness(f, a4, vt, r);

  // 1/t^2 + 1/t is the image of 1/t, so its class is unbounded
  RatFunc ainf = RatFunc(Poly::one(f), t * t) + RatFunc(Poly::one(f), t);
  r = m_value(ainf, vt);
  CHECK(r.kind == MValKind::infinite);
  CHECK(r.witness_b == RatFunc::zero(f));
  check_witness(f, ainf, vt, r);

  // residue digit 1 has nonzero trace over F_2
  r = m_value(one, vt);
  CHECK(r.kind == MValKind::zero);
  CHECK(r.witness_b == one);
  CHECK(r.witness_h == RatFunc::zero(f));

  r = m_value(RatFunc::zero(f), vt);
  CHECK(r.kind == MValKind::infinite);
  CHECK(r.witness_h == RatFunc::zero(f));

  // positive valuation is already unbounded territory
  r = m_value(RatFunc(t), vt);
  CHECK(r.kind == MValKind::infinite);
  CHECK(r.witness_b == RatFunc(t));
}

TEST_CASE("m_value clears a zero-trace residue digit over F4") {
  Fq f(2, 2);
  Poly t = Poly::t(f);
  Place vt = Place::finite(t);
  // trace of 1 vanishes in F_4: c^2 - c = 1 has the solution g
  MValResult r = m_value(RatFunc::one(f), vt);
  CHECK(r.kind == MValKind::infinite);
  CHECK(r.witness_h == RatFunc::constant(f.gen()));
  CHECK(r.witness_b == RatFunc::zero(f));
  // but g itself has trace 1
  r = m_value(RatFunc::constant(f.gen()), vt);
  CHECK(r.kind == MValKind::zero);
}

TEST_CASE("trace records strictly increasing cleared valuations") {
  std::mt19937 rng(8101);
  Fq f(2, 1);
  Place vt = Place::finite(Poly::t(f));
  int nontrivial = 0;
  for (int i = 0; i < 200; ++i) {
    RatFunc a = testutil::random_local(f, vt, 6, rng);
    ReductionTrace trace;
    MValResult r = m_value(a, vt, &trace);
    check_witness(f, a, vt, r);
    long long prev = std::numeric_limits<long long>::min();
    for (const ReductionStep& s : trace.steps) {
      CHECK(s.before_valuation > prev);
      CHECK(s.before_valuation <= 0);
      // negative clearings happen only at p-divisible pole orders
      if (s.before_valuation < 0) CHECK(s.before_valuation % f.p() == 0);
      prev = s.before_valuation;
    }
    if (!trace.steps.empty()) ++nontrivial;
    // replaying the shifts reproduces the witness
    RatFunc b = a;
    RatFunc h_total = RatFunc::zero(f);
    for (const ReductionStep& s : trace.steps) {
      CHECK(valuation(b, vt) == Valuation::finite(s.before_valuation));
      b = b - (s.shift.pow(f.p()) - s.shift);
      h_total = h_total - s.shift;
    }
    CHECK(b == r.witness_b);
    CHECK(h_total == r.witness_h);
  }
  CHECK(nontrivial > 50);
}

TEST_CASE("m_value at degree-2 and infinite places, random contracts") {
  std::mt19937 rng(8102);
  Fq f2(2, 1);
  Fq f3(3, 1);
  Fq f4(2, 2);
  std::vector<std::pair<const Fq*, Place>> cases;
  cases.emplace_back(&f2, Place::finite(monic_poly_from_rank(f2, 2, 3)));
  cases.emplace_back(&f2, Place::infinity(f2));
  cases.emplace_back(&f3, Place::finite(Poly::t(f3)));
  cases.emplace_back(&f3, Place::infinity(f3));
  cases.emplace_back(&f4, Place::infinity(f4));
  for (auto& [f, v] : cases) {
    for (int i = 0; i < 80; ++i) {
      RatFunc a = v.is_infinity() ? testutil::random_ratfunc(*f, 6, rng)
                                  : testutil::random_local(*f, v, 6, rng);
      MValResult r = m_value(a, v);
      check_witness(*f, a, v, r);
    }
  }
}

TEST_CASE("m_value at infinity equals the substituted computation") {
  Fq f(2, 1);
  Poly t = Poly::t(f);
  MValResult r = m_value(RatFunc(t * t * t), Place::infinity(f));
  CHECK(r.kind == MValKind::negative);
  CHECK(r.m == -3);
  CHECK(r.witness_h == RatFunc::zero(f));
  r = m_value(RatFunc(t * t), Place::infinity(f));
  CHECK(r.kind == MValKind::negative);
  CHECK(r.m == -1);
  CHECK(r.witness_h == RatFunc(t));
  CHECK(r.witness_b == RatFunc(t));
}

TEST_CASE("coset invariance of the m-value") {
  std::mt19937 rng(8103);
  for (auto [p, r_] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    Fq f(p, r_);
    Place vt = Place::finite(Poly::t(f));
    for (int i = 0; i < 60; ++i) {
      RatFunc a = testutil::random_local(f, vt, 4, rng);
      RatFunc h = testutil::random_local(f, vt, 2, rng);
      RatFunc a2 = a + h.pow(p) - h;
      MValResult r1 = m_value(a, vt);
      MValResult r2 = m_value(a2, vt);
      CHECK(r1.kind == r2.kind);
      if (r1.kind == MValKind::negative) CHECK(r1.m == r2.m);
    }
  }
}

TEST_CASE("degree-p total ramification wrapper") {
  Fq f(2, 1);
  Poly t = Poly::t(f);
  Place vt = Place::finite(t);
  CHECK(totally_ramified_degree_p(RatFunc(Poly::one(f), t * t * t), vt));
  CHECK(totally_ramified_degree_p(RatFunc(Poly::one(f), t * t), vt));
  CHECK_FALSE(totally_ramified_degree_p(RatFunc::one(f), vt));
  CHECK_FALSE(totally_ramified_degree_p(RatFunc::zero(f), vt));
  CHECK_FALSE(
      totally_ramified_degree_p(RatFunc(Poly::one(f), t * t) + RatFunc(Poly::one(f), t), vt));
}
