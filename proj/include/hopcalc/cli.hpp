#pragma once

// Command-line front end. Exit codes: 0 success, 2 parse/malformed input,
// 3 precondition violation, 4 search cap exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace hopcalc::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_parse = 2;
inline constexpr int exit_precondition = 3;
inline constexpr int exit_cap = 4;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopcalc::cli
