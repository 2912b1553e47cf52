#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "permstats/oeis.hpp"

namespace permstats {

// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitEnvironment = 3 };

struct CliIo {
    std::ostream& out;
    std::ostream& err;
    // Empty means real HTTP.
    HttpGet transport{};
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, CliIo io);

} // namespace permstats
