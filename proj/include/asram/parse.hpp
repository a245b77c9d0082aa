#pragma once

#include <string>
#include <vector>

#include "asram/ratfunc.hpp"

namespace asram {

// Expression grammar over F_q(t):
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := atom ['^' ['-'] integer]
//   atom   := integer | indeterminate | 'g' | '(' expr ')'
// Integers map into the prime field.  'g' is the field generator and is
// only accepted when allow_generator is set and r > 1.
struct ParseOptions {
  char indeterminate = 't';
  bool allow_generator = true;
};

RatFunc parse_expression(const Fq& f, const std::string& text, const ParseOptions& opt = {});

// Expression that must evaluate to a constant.
FqElem parse_field_element(const Fq& f, const std::string& text);

// "inf" or a polynomial expression; finite places are normalized to monic
// and checked for irreducibility.
Place parse_place(const Fq& f, const std::string& text);

// Polynomial in 'g' over F_p, returned as its coefficient vector
// (low-to-high) for FieldSpec construction.
std::vector<int> parse_modulus_string(int p, const std::string& text);

}  // namespace asram
