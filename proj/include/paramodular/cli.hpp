#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace paramodular {

// Exit codes of run().
constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_invalid_input = 2;

// args excludes the program name.  Reports go to out (or --out), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace paramodular
