#include "asram/oracle.hpp"

namespace asram {

namespace {

constexpr long long kSearchSpaceCap = 10'000'000;

// Shared enumeration engine for brute_force_m and coset_valuation_scan.
//
// Candidates are h = sum_{j=0..B} lift(c_j) * pi^-j.  In characteristic p,
//   h^P - h = sum_j (lift(c_j)^P * pi^-jP - lift(c_j) * pi^-j)
// and canonical lifts add digit-by-digit, so the expansion of a + h^P - h
// is the digit-wise sum of the expansion of a with each level's
// contributions.  Level j touches exponents [-jP, -jP + P) and -j, all at
// or above -(j-1)P once levels B..j are fixed; hence after placing c_j the
// digits below -(j-1)P are final.  The first nonzero final digit pins the
// valuation of every completion, closing the whole subtree at once.
class CosetSearch {
 public:
  CosetSearch(const RatFunc& a, const Place& v, const SearchBound& bound)
      : f_(a.field()),
        v_(v),
        rf_(f_, v.pi()),
        a_(a),
        pi_fn_(v.pi()),
        best_h_(RatFunc::zero(f_)) {
    if (bound.b < 1) fail(Errc::invalid_parameter, "search bound must be >= 1");
    B_ = bound.b;
    P_ = bound.power == CosetPower::p ? f_.p() : f_.q();
    nranks_ = rf_.size();

    long long space = 1;
    for (int j = 1; j <= B_; ++j) {
      if (space > kSearchSpaceCap / nranks_)
        fail(Errc::search_space_too_large,
             "coset search space exceeds " + std::to_string(kSearchSpaceCap));
      space *= nranks_;
    }

    Valuation va = valuation(a_, v_);
    lo_ = -static_cast<long long>(B_) * P_;
    if (!va.is_infinite() && va.value() < lo_) lo_ = va.value();
    hi_ = P_ + 2;

    elems_.reserve(nranks_);
    lifts_.reserve(nranks_);
    pow_digits_.reserve(nranks_);
    for (long long rank = 0; rank < nranks_; ++rank) {
      ResidueElem c = rf_.from_rank(rank);
      Poly lift = rf_.lift(c);
      std::vector<ResidueElem> pd(P_, rf_.zero());
      if (rank != 0) {
        // lift^P is a polynomial of pi-degree < P, so this expansion is exact
        LocalExpansion le = local_expand(RatFunc(lift.pow(P_)), v_, P_);
        for (std::size_t i = 0; i < le.digits.size(); ++i) pd[le.start + i] = le.digits[i];
      }
      elems_.push_back(std::move(c));
      lifts_.push_back(std::move(lift));
      pow_digits_.push_back(std::move(pd));
    }

    acc_.assign(hi_ - lo_, rf_.zero());
    LocalExpansion base = local_expand(a_, v_, hi_);
    for (std::size_t i = 0; i < base.digits.size(); ++i)
      acc_[base.start + i - lo_] = base.digits[i];
    choice_.assign(B_ + 1, 0);
  }

  void run() {
    dfs(B_, lo_);
    invariant(have_best_, "coset search finished without any outcome");
    RatFunc w = a_ + best_h_.pow(P_) - best_h_;
    if (best_infinite_) {
      invariant(w.is_zero(), "infinite-valuation witness does not cancel");
      invariant(infinite_achieved_, "witness and scan disagree on infinity");
    } else {
      invariant(valuation(w, v_) == Valuation::finite(best_val_),
                "coset witness misses its recorded valuation");
      invariant(!achieved_.empty() && *achieved_.rbegin() == best_val_,
                "best valuation is not the scan maximum");
    }
  }

  std::set<long long> achieved_;
  bool infinite_achieved_ = false;
  bool best_infinite_ = false;
  long long best_val_ = 0;

  const RatFunc& best_h() const { return best_h_; }

 private:
  void apply(int j, long long rank, bool add) {
    if (rank == 0) return;
    const std::vector<ResidueElem>& pd = pow_digits_[rank];
    long long base_e = -static_cast<long long>(j) * P_;
    for (long long k = 0; k < P_; ++k) {
      ResidueElem& slot = acc_[base_e + k - lo_];
      slot = add ? rf_.add(slot, pd[k]) : rf_.sub(slot, pd[k]);
    }
    ResidueElem& single = acc_[-static_cast<long long>(j) - lo_];
    single = add ? rf_.sub(single, elems_[rank]) : rf_.add(single, elems_[rank]);
  }

  RatFunc build_h(int j_low) const {
    RatFunc h = RatFunc::zero(f_);
    for (int i = B_; i >= j_low; --i) {
      if (choice_[i] == 0) continue;
      h = h + RatFunc(lifts_[choice_[i]]) * pi_fn_.pow(-i);
    }
    return h;
  }

  void record(Valuation val, int j_low) {
    if (val.is_infinite()) {
      infinite_achieved_ = true;
      if (!have_best_ || !best_infinite_) {
        have_best_ = true;
        best_infinite_ = true;
        best_h_ = build_h(j_low);
      }
      return;
    }
    achieved_.insert(val.value());
    if (!have_best_ || (!best_infinite_ && val.value() > best_val_)) {
      have_best_ = true;
      best_val_ = val.value();
      best_h_ = build_h(j_low);
    }
  }

  void dfs(int j, long long scanned_to) {
    long long next_bound = j > 0 ? -(static_cast<long long>(j) - 1) * P_ : hi_;
    for (long long rank = 0; rank < nranks_; ++rank) {
      apply(j, rank, true);
      choice_[j] = rank;
      long long e0 = scanned_to;
      while (e0 < next_bound && acc_[e0 - lo_].is_zero()) ++e0;
      if (e0 < next_bound) {
        // digit at e0 is final: every completion has valuation exactly e0
        record(Valuation::finite(e0), j);
      } else if (j > 0) {
        dfs(j - 1, next_bound);
      } else {
        // whole window vanished; settle this single h exactly
        RatFunc h = build_h(0);
        RatFunc w = a_ + h.pow(P_) - h;
        Valuation val = valuation(w, v_);
        invariant(val.is_infinite() || val.value() >= hi_,
                  "exact fallback contradicts the scanned window");
        record(val, 0);
      }
      apply(j, rank, false);
    }
  }

  const Fq& f_;
  Place v_;
  ResidueField rf_;
  RatFunc a_;
  RatFunc pi_fn_;
  int B_ = 0;
  long long P_ = 0;
  long long nranks_ = 0;
  long long lo_ = 0, hi_ = 0;
  std::vector<ResidueElem> elems_;
  std::vector<Poly> lifts_;
  std::vector<std::vector<ResidueElem>> pow_digits_;
  std::vector<ResidueElem> acc_;
  std::vector<long long> choice_;
  bool have_best_ = false;
  RatFunc best_h_;
};

}  // namespace

BruteForceResult brute_force_m(const RatFunc& a, const Place& v, const SearchBound& bound) {
  if (v.is_infinity()) {
    BruteForceResult sub =
        brute_force_m(infinity_substitute(a), Place::finite(Poly::t(a.field())), bound);
    return BruteForceResult{sub.best, infinity_substitute(sub.witness_h)};
  }
  CosetSearch search(a, v, bound);
  search.run();
  Valuation best =
      search.best_infinite_ ? Valuation::infinite() : Valuation::finite(search.best_val_);
  return BruteForceResult{best, search.best_h()};
}

CosetScan coset_valuation_scan(const RatFunc& a, const Place& v, const SearchBound& bound) {
  if (v.is_infinity())
    return coset_valuation_scan(infinity_substitute(a), Place::finite(Poly::t(a.field())), bound);
  CosetSearch search(a, v, bound);
  search.run();
  CosetScan out;
  out.achieved = std::move(search.achieved_);
  out.infinite_achieved = search.infinite_achieved_;
  return out;
}

std::optional<SeriesRoot> series_root(const RatFunc& b, const Place& v, long long n) {
  const Fq& f = b.field();
  if (n < 0) fail(Errc::invalid_parameter, "negative precision");
  if (v.is_infinity()) {
    // digits transfer verbatim: the substitution fixes constants
    auto sub = series_root(infinity_substitute(b), Place::finite(Poly::t(f)), n);
    if (!sub) return std::nullopt;
    sub->lifted = infinity_substitute(sub->lifted);
    return sub;
  }
  Valuation vb = valuation(b, v);
  if (vb < Valuation::finite(0))
    fail(Errc::precondition_violated, "series root needs valuation(b) >= 0");

  ResidueField rf(f, v.pi());
  RatFunc pi_fn{v.pi()};
  std::vector<ResidueElem> digits(n, rf.zero());
  RatFunc y = RatFunc::zero(f);
  RatFunc w = b;  // w = b - (y^p - y) throughout
  while (!w.is_zero()) {
    auto [e, d] = leading_digit(w, v);
    if (e >= n) break;
    invariant(e >= 0, "series residual dropped below valuation zero");
    ResidueElem digit = rf.zero();
    if (e == 0) {
      // the constant digit must solve c^p - c = d; no solution means no root
      std::optional<ResidueElem> sol = rf.artin_schreier_solve(d);
      if (!sol) return std::nullopt;
      digit = *sol;
    } else {
      digit = rf.neg(d);
    }
    digits[e] = digit;
    RatFunc delta = RatFunc(rf.lift(digit)) * pi_fn.pow(e);
    y = y + delta;
    w = w + delta - delta.pow(f.p());
  }
  RatFunc res = y.pow(f.p()) - y - b;
  Valuation vres = valuation(res, v);
  invariant(vres.is_infinite() || vres.value() >= n, "series root misses its precision bound");
  return SeriesRoot{std::move(digits), n, std::move(y)};
}

}  // namespace asram
