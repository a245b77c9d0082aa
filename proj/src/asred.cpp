#include "asram/asred.hpp"

namespace asram {

namespace {

// h^p - h, the coset move generated by h
RatFunc as_image(const RatFunc& h) { return h.pow(h.field().p()) - h; }

MValResult finish(MValKind kind, long long m, const RatFunc& a, RatFunc b, RatFunc h,
                  const Place& v) {
  invariant(b == a + as_image(h), "reduction witness fails b = a + h^p - h");
  Valuation val = valuation(b, v);
  switch (kind) {
    case MValKind::negative:
      invariant(!val.is_infinite() && val.value() == m && m < 0 && m % a.field().p() != 0,
                "negative m-value fails its contract");
      break;
    case MValKind::zero:
      invariant(!val.is_infinite() && val.value() == 0, "zero m-value without valuation 0");
      break;
    case MValKind::infinite:
      invariant(val.is_infinite() || val.value() >= 1, "infinite m-value below valuation 1");
      break;
  }
  return MValResult{kind, m, std::move(b), std::move(h)};
}

}  // namespace

std::pair<RatFunc, RatFunc> reduce_once(const RatFunc& b, const Place& v) {
  const Fq& f = b.field();
  if (v.is_infinity()) {
    Place s_place = Place::finite(Poly::t(f));
    auto [bs, hs] = reduce_once(infinity_substitute(b), s_place);
    return {infinity_substitute(bs), infinity_substitute(hs)};
  }
  Valuation val = valuation(b, v);
  if (val.is_infinite() || val.value() >= 0)
    fail(Errc::precondition_violated, "reduce_once needs a pole, valuation is " + val.str());
  long long k = -val.value();
  if (k % f.p() != 0)
    fail(Errc::precondition_violated,
         "reduce_once needs p | pole order, got pole order " + std::to_string(k));

  ResidueField rf(f, v.pi());
  ResidueElem digit = leading_digit(b, v).second;
  RatFunc h = RatFunc(rf.lift(rf.pth_root(digit))) / RatFunc(v.pi()).pow(k / f.p());
  RatFunc b2 = b - as_image(h);
  Valuation after = valuation(b2, v);
  invariant(after.is_infinite() || after.value() >= -k + 1, "reduction step did not raise valuation");
  return {b2, h};
}

MValResult m_value(const RatFunc& a, const Place& v, ReductionTrace* trace) {
  const Fq& f = a.field();
  if (v.is_infinity()) {
    // mirror through s = 1/t; the substitution is a valuation-preserving
    // field map, so witnesses transport back exactly
    Place s_place = Place::finite(Poly::t(f));
    ReductionTrace sub;
    MValResult r = m_value(infinity_substitute(a), s_place, trace ? &sub : nullptr);
    r.witness_b = infinity_substitute(r.witness_b);
    r.witness_h = infinity_substitute(r.witness_h);
    if (trace) {
      for (ReductionStep& st : sub.steps)
        trace->steps.push_back(
            ReductionStep{st.before_valuation, st.digit, infinity_substitute(st.shift)});
    }
    invariant(r.witness_b == a + as_image(r.witness_h), "witness lost under substitution");
    return r;
  }

  RatFunc b = a;
  RatFunc h_total = RatFunc::zero(f);
  if (a.is_zero()) return finish(MValKind::infinite, 0, a, b, h_total, v);

  ResidueField rf(f, v.pi());
  long long initial_pole = 0;
  {
    Valuation val = valuation(a, v);
    if (val.value() < 0) initial_pole = -val.value();
  }
  long long rounds = 0;
  while (true) {
    invariant(++rounds <= initial_pole + 2, "reduction failed to terminate");
    Valuation val = valuation(b, v);
    if (val.is_infinite() || val.value() >= 1) return finish(MValKind::infinite, 0, a, b, h_total, v);

    if (val.value() < 0) {
      long long k = -val.value();
      if (k % f.p() != 0) return finish(MValKind::negative, -k, a, b, h_total, v);
      ResidueElem digit = leading_digit(b, v).second;
      auto [b2, h] = reduce_once(b, v);
      if (trace) trace->steps.push_back(ReductionStep{-k, rf.lift(digit), h});
      b = std::move(b2);
      h_total = h_total - h;
      continue;
    }

    // valuation exactly 0: the digit clears iff its trace to F_p vanishes
    ResidueElem digit = leading_digit(b, v).second;
    if (rf.trace_to_prime(digit) != 0) return finish(MValKind::zero, 0, a, b, h_total, v);
    auto sol = rf.artin_schreier_solve(digit);
    invariant(sol.has_value(), "trace-zero digit without an Artin-Schreier solution");
    RatFunc h{rf.lift(*sol)};
    if (trace) trace->steps.push_back(ReductionStep{0, rf.lift(digit), h});
    b = b - as_image(h);
    h_total = h_total - h;
  }
}

bool totally_ramified_degree_p(const RatFunc& a, const Place& v) {
  return m_value(a, v).kind == MValKind::negative;
}

}  // namespace asram
