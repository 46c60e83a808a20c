// tools/cli.hpp: entry point of the holdring command-line tool.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holdring::cli {

    inline constexpr int kExitOk = 0;
    inline constexpr int kExitDomain = 1;
    inline constexpr int kExitUsage = 2;

    /// Runs one command; `args` excludes the program name.
    int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace holdring::cli
