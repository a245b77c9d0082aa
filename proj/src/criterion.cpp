#include "asram/criterion.hpp"

#include <numeric>

namespace asram {

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::totally_ramified: return "TotallyRamified";
    case Decision::ramified_not_totally: return "RamifiedNotTotally";
    case Decision::unramified: return "Unramified";
  }
  return "Unknown";
}

std::vector<FqElem> gamma_representatives(const Fq& f) {
  std::vector<bool> seen(static_cast<size_t>(f.q()), false);
  std::vector<FqElem> reps;
  for (long long rk = 1; rk < f.q(); ++rk) {
    if (seen[static_cast<size_t>(rk)]) continue;
    FqElem g = f.from_rank(rk);
    reps.push_back(g);
    for (int c = 1; c < f.p(); ++c)
      seen[static_cast<size_t>(f.rank(f.mul(g, f.from_int(c))))] = true;
  }
  invariant(static_cast<long long>(reps.size()) == (f.q() - 1) / (f.p() - 1),
            "wrong number of multiplicative classes");
  return reps;
}

std::vector<std::pair<FqElem, RatFunc>> minimal_subextension_generators(const RatFunc& a) {
  std::vector<std::pair<FqElem, RatFunc>> out;
  for (const FqElem& g : gamma_representatives(a.field()))
    out.emplace_back(g, RatFunc::constant(g) * a);
  return out;
}

namespace {

int inv_mod(int a, int p) {
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

// kernel basis of the F_p-linear map given by rows, acting on F_p^r
std::vector<std::vector<int>> kernel_basis(std::vector<std::vector<int>> rows, int r, int p) {
  std::vector<int> pivot_cols;
  size_t row_idx = 0;
  for (int col = 0; col < r && row_idx < rows.size(); ++col) {
    size_t sel = row_idx;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[row_idx], rows[sel]);
    int linv = inv_mod(rows[row_idx][col], p);
    for (int j = 0; j < r; ++j)
      rows[row_idx][j] = static_cast<int>((static_cast<long long>(rows[row_idx][j]) * linv) % p);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == row_idx || rows[i][col] == 0) continue;
      int fct = rows[i][col];
      for (int j = 0; j < r; ++j)
        rows[i][j] = ((rows[i][j] - fct * rows[row_idx][j]) % p + p) % p;
    }
    pivot_cols.push_back(col);
    ++row_idx;
  }
  std::vector<std::vector<int>> basis;
  for (int col = 0; col < r; ++col) {
    bool pivot = false;
    for (int pc : pivot_cols) pivot = pivot || pc == col;
    if (pivot) continue;
    std::vector<int> vec(r, 0);
    vec[col] = 1;
    for (size_t k = 0; k < pivot_cols.size(); ++k)
      vec[pivot_cols[k]] = (p - rows[k][col]) % p;
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace

std::vector<FqElem> inertia_subgroup(const RamificationReport& report, const Fq& f) {
  std::vector<std::vector<int>> rows;
  for (const GammaClassResult& cls : report.per_gamma) {
    if (cls.mval.kind == MValKind::negative) continue;
    std::vector<int> row(f.r());
    for (int i = 0; i < f.r(); ++i)
      row[i] = f.trace(f.mul(cls.gamma, f.pow(f.gen(), i)));
    rows.push_back(std::move(row));
  }
  std::vector<FqElem> basis;
  for (std::vector<int>& vec : kernel_basis(std::move(rows), f.r(), f.p()))
    basis.push_back(f.from_coeffs(std::move(vec)));
  return basis;
}

RamificationReport classify_ramification(const RatFunc& a, const Place& v,
                                         std::vector<ReductionTrace>* traces) {
  const Fq& f = a.field();
  RamificationReport report;
  for (const auto& [gamma, ga] : minimal_subextension_generators(a)) {
    ReductionTrace tr;
    MValResult mv = m_value(ga, v, traces ? &tr : nullptr);
    if (traces) traces->push_back(std::move(tr));
    report.per_gamma.push_back(GammaClassResult{gamma, std::move(mv), ga});
  }

  size_t negatives = 0;
  for (const GammaClassResult& cls : report.per_gamma)
    negatives += cls.mval.kind == MValKind::negative ? 1 : 0;
  report.decision = negatives == report.per_gamma.size() ? Decision::totally_ramified
                    : negatives == 0                     ? Decision::unramified
                                                         : Decision::ramified_not_totally;

  report.inertia_basis = inertia_subgroup(report, f);
  report.ramification_index = 1;
  for (size_t i = 0; i < report.inertia_basis.size(); ++i) report.ramification_index *= f.p();

  // cross-checks tying the decision to the witnesses and the inertia index;
  // a failure here means the reduction and the criterion disagree
  bool all_witnesses_negative_coprime = true;
  for (const GammaClassResult& cls : report.per_gamma) {
    Valuation val = valuation(cls.mval.witness_b, v);
    bool neg_coprime = !val.is_infinite() && val.value() < 0 && val.value() % f.p() != 0;
    all_witnesses_negative_coprime = all_witnesses_negative_coprime && neg_coprime;
    invariant(neg_coprime == (cls.mval.kind == MValKind::negative),
              "witness valuation contradicts its class kind");
  }
  invariant(all_witnesses_negative_coprime == (report.decision == Decision::totally_ramified),
            "per-class witnesses contradict the total-ramification decision");
  long long e = report.ramification_index;
  switch (report.decision) {
    case Decision::totally_ramified:
      invariant(e == f.q(), "totally ramified but inertia is not everything");
      break;
    case Decision::unramified:
      invariant(e == 1, "unramified but inertia is nontrivial");
      break;
    case Decision::ramified_not_totally:
      invariant(e > 1 && e < f.q(), "partial ramification with degenerate inertia");
      break;
  }
  return report;
}

namespace {

void check_example_params(const Fq& f, int d, const FqElem& gamma, bool need_d_above_one) {
  if (d < 1 || d % f.p() == 0)
    fail(Errc::invalid_d, "d must be positive and coprime to p, got d = " + std::to_string(d));
  if (need_d_above_one && d == 1) fail(Errc::invalid_d, "variant a requires d > 1");
  if (gamma == f.one()) fail(Errc::gamma_is_one, "gamma must differ from 1");
  if (f.norm(gamma) != 1)
    fail(Errc::gamma_not_norm_one, "gamma must have norm 1, got norm " + std::to_string(f.norm(gamma)));
}

}  // namespace

RatFunc build_example(ExampleVariant variant, const Fq& f, int d, const FqElem& gamma) {
  check_example_params(f, d, gamma, variant == ExampleVariant::a);
  RatFunc t = RatFunc::t(f);
  RatFunc f_part = variant == ExampleVariant::a ? RatFunc::one(f) / t : t;
  return t.pow(-static_cast<long long>(d) * f.p()) - RatFunc::constant(gamma) * t.pow(-d) + f_part;
}

RatFunc example_coset_witness(const Fq& f, int d, const FqElem& gamma, const FqElem& delta,
                              const RatFunc& f_part) {
  check_example_params(f, d, gamma, false);
  if (delta.is_zero()) fail(Errc::zero_input, "delta must be nonzero");
  FqElem eps = f.pth_root(delta);
  RatFunc t = RatFunc::t(f);
  RatFunc b = RatFunc::constant(f.sub(eps, f.mul(delta, gamma))) * t.pow(-d) +
              RatFunc::constant(delta) * f_part;
  // b must equal delta * a - (h^p - h) for h = eps / t^d
  RatFunc a = t.pow(-static_cast<long long>(d) * f.p()) - RatFunc::constant(gamma) * t.pow(-d) +
              f_part;
  RatFunc h = RatFunc::constant(eps) * t.pow(-d);
  invariant(b == RatFunc::constant(delta) * a - (h.pow(f.p()) - h),
            "example witness left its coset");
  return b;
}

}  // namespace asram
