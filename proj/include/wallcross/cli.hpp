#ifndef WALLCROSS_CLI_HPP
#define WALLCROSS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wallcross::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_mismatch = 2;

// Runs one command line (args excludes the program name) and returns the
// process exit code: 0 ok, 2 mismatch, 1 error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace wallcross::cli

#endif
