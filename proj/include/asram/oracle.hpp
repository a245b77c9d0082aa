#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "asram/ratfunc.hpp"

namespace asram {

enum class CosetPower { p, q };

// Exhaustive-search window: candidate shifts are
//   h = c_B/pi^B + ... + c_1/pi + c_0
// with each c_j ranging over the residue field at the place.  The search
// space |residue|^B must stay at or below 10^7.
struct SearchBound {
  int b = 6;
  CosetPower power = CosetPower::p;
};

struct BruteForceResult {
  Valuation best;
  RatFunc witness_h;
};

// Valuations v(a + h^P - h) attained over the whole search family.
struct CosetScan {
  std::set<long long> achieved;   // finite values, ascending
  bool infinite_achieved = false;  // some shift lands exactly on zero

  Valuation max() const {
    if (infinite_achieved) return Valuation::infinite();
    invariant(!achieved.empty(), "empty coset scan");
    return Valuation::finite(*achieved.rbegin());
  }
};

// max v(a + h^P - h) over the family, with the first witness in enumeration
// order (levels c_B, ..., c_0, residue ranks ascending).  Equivalent to
// literal enumeration but prunes subtrees whose valuation is already pinned
// by the digits no later choice can touch.
BruteForceResult brute_force_m(const RatFunc& a, const Place& v, const SearchBound& bound);

// The full set of attained valuations from the same enumeration.
CosetScan coset_valuation_scan(const RatFunc& a, const Place& v, const SearchBound& bound);

// Digit-by-digit solution of y^p - y = b in the completion at v, for
// valuation(b, v) >= 0.  Returns nullopt when the constant digit has no
// residue solution (nonzero trace); otherwise the truncation satisfies
// valuation(lifted^p - lifted - b, v) >= precision.
struct SeriesRoot {
  std::vector<ResidueElem> digits;  // exponents 0 .. precision-1
  long long precision = 0;
  RatFunc lifted;  // canonical lift of the digits into E
};

std::optional<SeriesRoot> series_root(const RatFunc& b, const Place& v, long long n);

}  // namespace asram
