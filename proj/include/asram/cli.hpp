#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "asram/error.hpp"

namespace asram::cli {

// Exit codes: 0 success (and expectations met for `example`), 2 bad input
// or unsatisfiable request, 3 violated internal invariant or a built-in
// example failing its own guarantees.
int exit_code_for(const Error& e);

// Runs the command line given argv[1..] in natural order; never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asram::cli
