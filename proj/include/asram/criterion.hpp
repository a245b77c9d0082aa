#pragma once

#include <utility>
#include <vector>

#include "asram/asred.hpp"

namespace asram {

// Per-translate outcome: the reduction of gamma * a and the generator of the
// minimal degree-p subextension it controls.
struct GammaClassResult {
  FqElem gamma;
  MValResult mval;
  RatFunc subextension_generator;  // gamma * a
};

enum class Decision { totally_ramified, ramified_not_totally, unramified };

const char* decision_name(Decision d);

// Full answer for the degree-q extension generated by a root of X^q - X - a:
// one reduction per F_q^x / F_p^x class, the inertia subgroup of the place
// inside the translation group F_q, and the ramification index e = |inertia|.
//
//   totally_ramified     iff every class is Negative   iff e = q
//   unramified           iff no class is Negative      iff e = 1
//   ramified_not_totally otherwise                      (1 < e < q)
struct RamificationReport {
  std::vector<GammaClassResult> per_gamma;
  Decision decision;
  std::vector<FqElem> inertia_basis;  // F_p-basis of the inertia subgroup
  long long ramification_index;
};

// One representative per F_q^x / F_p^x class, ascending in the base-p
// encoding of coefficient vectors; (q-1)/(p-1) elements, the first is 1.
std::vector<FqElem> gamma_representatives(const Fq& f);

// (gamma, gamma * a) for each representative: generators of the minimal
// degree-p subextensions.
std::vector<std::pair<FqElem, RatFunc>> minimal_subextension_generators(const RatFunc& a);

// Inertia subgroup basis: solutions beta of trace(gamma * beta) = 0 for every
// class gamma whose reduction is non-negative.
std::vector<FqElem> inertia_subgroup(const RamificationReport& report, const Fq& f);

RamificationReport classify_ramification(const RatFunc& a, const Place& v,
                                         std::vector<ReductionTrace>* traces = nullptr);

// The two built-in example families over F_q(t) with parameters d (coprime
// to p) and gamma (norm 1, gamma != 1):
//
//   a(t) = 1/t^(d*p) - gamma/t^d + f(t)
//
// with f = 1/t for variant A (totally ramified at t) and f = t for variant B
// (ramified but not totally, despite every bounded q-coset valuation being
// negative).  Variant A additionally requires d > 1.
enum class ExampleVariant { a, b };

RatFunc build_example(ExampleVariant variant, const Fq& f, int d, const FqElem& gamma);

// The explicit coset witness for the delta-translate of the example input:
// b = (eps - delta * gamma)/t^d + delta * f_part with eps^p = delta.  Checked
// internally to lie in delta * a + E^p - E.
RatFunc example_coset_witness(const Fq& f, int d, const FqElem& gamma, const FqElem& delta,
                              const RatFunc& f_part);

}  // namespace asram
