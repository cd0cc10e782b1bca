#ifndef BIDX_TOOLS_CLI_H_
#define BIDX_TOOLS_CLI_H_

#include <ostream>
#include <span>
#include <string>

namespace bidx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (args excludes the program name). Results go to
// `out` unless --out names a file; diagnostics go to `err`.
int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace bidx::cli

#endif  // BIDX_TOOLS_CLI_H_
