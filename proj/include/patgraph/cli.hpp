#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace patgraph::cli
{
    enum ExitCode : int
    {
        Success = 0,
        UsageOrParseError = 1,
        VerificationMismatch = 2,
    };

    /// Environment variable naming the default catalog location.
    inline constexpr const char * catalog_env_var = "PATGRAPH_CATALOG";

    /// Runs the tool. `args` excludes the program name.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
