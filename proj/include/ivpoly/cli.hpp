#ifndef IVPOLY_CLI_HPP
#define IVPOLY_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ivpoly::cli {

// Exit codes: 0 success, 1 verdict-false under --strict, 2 usage or parse
// error, 3 unsupported input (effort bounds).
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnsupported = 3;

// Runs the command line (without argv[0]); all output goes to the supplied
// streams so tests can capture it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ivpoly::cli

#endif
