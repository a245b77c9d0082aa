#pragma once

#include <utility>
#include <vector>

#include "asram/ratfunc.hpp"

namespace asram {

// Outcome of maximizing valuation(b, v) over the coset a + E^p - E.
//
//   Negative: the maximum is m < 0 with gcd(p, m) = 1, witnessed exactly.
//   Zero:     the maximum is 0 (the leading residue digit has nonzero trace
//             to F_p, so it cannot be cleared).
//   Infinite: an element of valuation >= 1 was reached; from there the
//             valuation is unbounded within the coset.
//
// witness_b always satisfies witness_b = a + witness_h^p - witness_h with
// exact arithmetic; for kind Negative, valuation(witness_b, v) = m.
enum class MValKind { negative, zero, infinite };

struct MValResult {
  MValKind kind;
  long long m = 0;  // meaningful only for kind negative
  RatFunc witness_b;
  RatFunc witness_h;
};

struct ReductionStep {
  long long before_valuation;
  Poly digit;     // canonical lift of the residue digit that was cleared
  RatFunc shift;  // h with b' = b - (h^p - h)
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;  // strictly increasing before_valuation
};

// One digit-clearing step.  Requires valuation(b, v) = -k with k > 0 and
// p | k; returns (b', h) with b' = b - (h^p - h) and valuation(b', v) >= -k + 1,
// where h = lift(pth_root(leading digit)) / pi^(k/p).  At the infinite place
// the step is mirrored through s = 1/t.
std::pair<RatFunc, RatFunc> reduce_once(const RatFunc& b, const Place& v);

// Full reduction.  Clears p-divisible negative digits, stops at the first
// negative valuation coprime to p (Negative), at an uncleared residue digit
// of nonzero trace (Zero), or at valuation >= 1 (Infinite).  a = 0 yields
// Infinite with zero witnesses.
MValResult m_value(const RatFunc& a, const Place& v, ReductionTrace* trace = nullptr);

// Degree-p criterion: v is totally ramified in the degree-p extension
// generated by a root of X^p - X - a iff the coset reaches a negative
// valuation coprime to p.
bool totally_ramified_degree_p(const RatFunc& a, const Place& v);

}  // namespace asram
