/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMCOMPAT_GUARD_TOOLS_CLI_HH
#define HOMCOMPAT_GUARD_TOOLS_CLI_HH 1

#include <ostream>
#include <string>
#include <vector>

namespace homcompat::cli
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_verification_failed = 1,
        exit_inconclusive = 2,
        exit_invalid_input = 3,
        exit_cap_exceeded = 4
    };

    /// Replace "--config file.json" by the flags its JSON object spells out,
    /// in place. A flag given again later on the command line wins.
    auto expand_config(const std::vector<std::string> & args) -> std::vector<std::string>;

    /// Runs one invocation. args excludes the program name. The JSON report
    /// goes to out, warnings and progress to err.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
