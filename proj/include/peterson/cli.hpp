#ifndef PETERSON_CLI_HPP
#define PETERSON_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace peterson::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// Parses `args` (without the program name), runs one command, and writes
/// results to `out` (or the --out file) and diagnostics to `err`.
/// Returns exit_ok, exit_failed (a verification failed) or exit_usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace peterson::cli

#endif  // PETERSON_CLI_HPP
