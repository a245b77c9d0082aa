#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace asram {

// Failure categories surfaced by the library.  The CLI maps
// internal_invariant to exit code 3 and everything else to exit code 2.
enum class Errc {
  division_by_zero,
  zero_input,
  norm_not_one,
  not_irreducible,
  not_positive_degree,
  invalid_prime,
  invalid_parameter,
  invalid_d,
  gamma_not_norm_one,
  gamma_is_one,
  precondition_violated,
  search_space_too_large,
  syntax_error,
  unknown_symbol,
  internal_invariant,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

// Consistency guard for conditions the algorithms themselves guarantee.
inline void invariant(bool ok, const std::string& msg) {
  if (!ok) throw Error(Errc::internal_invariant, msg);
}

}  // namespace asram
