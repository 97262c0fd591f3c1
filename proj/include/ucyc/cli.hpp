// Command-line frontend: gen, verify, stats, count, list, sweep.

#ifndef UCYC_CLI_HPP_
#define UCYC_CLI_HPP_

#include <iosfwd>
#include <span>
#include <string>

namespace ucyc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNonEulerian = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitUsage = 64;

/// Runs one invocation; `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace ucyc::cli

#endif  // UCYC_CLI_HPP_
