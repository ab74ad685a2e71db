#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rolecol::cli
{
    enum ExitCode : int
    {
        success = 0,
        negative = 1,
        usage = 2
    };

    /// Runs one command line (args[0] is the program name). Payloads go to
    /// `out`, diagnostics to `err`.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

    /// Brute-force vertex ceiling, ROLECOL_ORACLE_LIMIT if set.
    auto oracle_limit() -> int;
}
