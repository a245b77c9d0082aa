#pragma once

#include <string>
#include <utility>
#include <vector>

#include "asram/criterion.hpp"
#include "asram/oracle.hpp"

namespace asram {

// Renderers for CLI output.  *_json functions return a serialized JSON
// document (2-space indent, keys in a fixed order); *_text functions return
// the human-readable form.  All field elements, polynomials and rational
// functions are printed with their str() forms, which parse back through
// the expression grammar.

const char* mval_kind_name(MValKind k);  // "negative" | "zero" | "infinite"

std::string mval_json(const MValResult& r, const ReductionTrace* trace = nullptr);
std::string mval_text(const MValResult& r, const ReductionTrace* trace = nullptr);

std::string ramify_json(const RamificationReport& rep);
std::string ramify_text(const RamificationReport& rep);

std::string subexts_json(const std::vector<std::pair<FqElem, RatFunc>>& gens);
std::string subexts_text(const std::vector<std::pair<FqElem, RatFunc>>& gens);

std::string oracle_json(const BruteForceResult& bf, const CosetScan& scan,
                        const SearchBound& bound);
std::string oracle_text(const BruteForceResult& bf, const CosetScan& scan,
                        const SearchBound& bound);

}  // namespace asram
