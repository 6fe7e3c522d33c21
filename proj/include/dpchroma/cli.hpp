#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dpchroma
{
    namespace exit_code
    {
        inline constexpr int success = 0;
        inline constexpr int usage = 1;
        inline constexpr int verification_failed = 2;
        inline constexpr int budget_exhausted = 3;
    }

    /// Runs the dpchroma command line; args excludes the program name.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
