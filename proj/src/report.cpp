#include "asram/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace asram {

using nlohmann::ordered_json;

const char* mval_kind_name(MValKind k) {
  switch (k) {
    case MValKind::negative: return "negative";
    case MValKind::zero: return "zero";
    case MValKind::infinite: return "infinite";
  }
  fail(Errc::internal_invariant, "unhandled kind");
}

namespace {

ordered_json mval_obj(const MValResult& r) {
  ordered_json j;
  j["kind"] = mval_kind_name(r.kind);
  if (r.kind == MValKind::negative)
    j["m"] = r.m;
  else
    j["m"] = nullptr;
  j["witness_b"] = r.witness_b.str();
  j["witness_h"] = r.witness_h.str();
  return j;
}

ordered_json trace_arr(const ReductionTrace& trace) {
  ordered_json arr = ordered_json::array();
  for (const ReductionStep& s : trace.steps) {
    ordered_json step;
    step["before_valuation"] = s.before_valuation;
    step["digit"] = s.digit.str();
    step["shift"] = s.shift.str();
    arr.push_back(std::move(step));
  }
  return arr;
}

std::string mval_line(const MValResult& r) {
  if (r.kind == MValKind::negative) return "m = " + std::to_string(r.m);
  if (r.kind == MValKind::zero) return "zero (maximum valuation 0)";
  return "infinite (unbounded valuation)";
}

}  // namespace

std::string mval_json(const MValResult& r, const ReductionTrace* trace) {
  ordered_json j = mval_obj(r);
  if (trace) j["trace"] = trace_arr(*trace);
  return j.dump(2);
}

std::string mval_text(const MValResult& r, const ReductionTrace* trace) {
  std::ostringstream out;
  out << "kind: " << mval_kind_name(r.kind) << "\n";
  if (r.kind == MValKind::negative) out << "m: " << r.m << "\n";
  out << "witness_b: " << r.witness_b.str() << "\n";
  out << "witness_h: " << r.witness_h.str() << "\n";
  if (trace) {
    out << "trace:\n";
    for (const ReductionStep& s : trace->steps)
      out << "  at " << s.before_valuation << ": digit = " << s.digit.str()
          << ", shift = " << s.shift.str() << "\n";
  }
  return out.str();
}

std::string ramify_json(const RamificationReport& rep) {
  ordered_json j;
  j["decision"] = decision_name(rep.decision);
  j["ramification_index"] = rep.ramification_index;
  ordered_json classes = ordered_json::array();
  for (const GammaClassResult& c : rep.per_gamma) {
    ordered_json e;
    e["gamma"] = c.gamma.str();
    if (c.mval.kind == MValKind::negative)
      e["m"] = c.mval.m;
    else
      e["m"] = nullptr;
    e["kind"] = mval_kind_name(c.mval.kind);
    e["witness_b"] = c.mval.witness_b.str();
    e["generator"] = c.subextension_generator.str();
    classes.push_back(std::move(e));
  }
  j["classes"] = std::move(classes);
  ordered_json basis = ordered_json::array();
  for (const FqElem& b : rep.inertia_basis) basis.push_back(b.str());
  j["inertia_basis"] = std::move(basis);
  return j.dump(2);
}

std::string ramify_text(const RamificationReport& rep) {
  std::ostringstream out;
  const char* phrase = rep.decision == Decision::totally_ramified ? "totally ramified"
                       : rep.decision == Decision::unramified     ? "unramified"
                                                                  : "ramified, not totally";
  out << "decision: " << phrase << " (e = " << rep.ramification_index << ")\n";
  std::size_t width = 0;
  for (const GammaClassResult& c : rep.per_gamma) width = std::max(width, c.gamma.str().size());
  for (const GammaClassResult& c : rep.per_gamma) {
    std::string g = c.gamma.str();
    out << "class gamma = " << g << std::string(width - g.size(), ' ') << "  "
        << mval_line(c.mval) << "\n";
  }
  out << "inertia basis:";
  if (rep.inertia_basis.empty()) {
    out << " (trivial)";
  } else {
    for (std::size_t i = 0; i < rep.inertia_basis.size(); ++i)
      out << (i ? ", " : " ") << rep.inertia_basis[i].str();
  }
  out << "\n";
  return out.str();
}

std::string subexts_json(const std::vector<std::pair<FqElem, RatFunc>>& gens) {
  ordered_json arr = ordered_json::array();
  for (const auto& [gamma, gen] : gens) {
    ordered_json e;
    e["gamma"] = gamma.str();
    e["generator"] = gen.str();
    arr.push_back(std::move(e));
  }
  return arr.dump(2);
}

std::string subexts_text(const std::vector<std::pair<FqElem, RatFunc>>& gens) {
  std::ostringstream out;
  for (const auto& [gamma, gen] : gens)
    out << "gamma = " << gamma.str() << ": generator = " << gen.str() << "\n";
  return out.str();
}

std::string oracle_json(const BruteForceResult& bf, const CosetScan& scan,
                        const SearchBound& bound) {
  ordered_json j;
  if (bf.best.is_infinite())
    j["best_valuation"] = nullptr;
  else
    j["best_valuation"] = bf.best.value();
  j["witness_h"] = bf.witness_h.str();
  j["bound"] = bound.b;
  ordered_json ach = ordered_json::array();
  for (long long v : scan.achieved) ach.push_back(v);
  j["achieved"] = std::move(ach);
  j["infinite_achieved"] = scan.infinite_achieved;
  return j.dump(2);
}

std::string oracle_text(const BruteForceResult& bf, const CosetScan& scan,
                        const SearchBound& bound) {
  std::ostringstream out;
  out << "best valuation: " << bf.best.str() << "\n";
  out << "witness_h: " << bf.witness_h.str() << "\n";
  out << "bound: " << bound.b << "\n";
  out << "achieved:";
  for (long long v : scan.achieved) out << " " << v;
  if (scan.infinite_achieved) out << " inf";
  out << "\n";
  return out.str();
}

}  // namespace asram
