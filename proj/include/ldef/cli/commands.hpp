#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ldef {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalid = 1,  ///< malformed document or failed validation
    kExitUsage = 2,
    kExitCap = 3,      ///< a degree cap stopped the computation
};

/// Runs one subcommand (args exclude the program name) and writes its report to `out`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ldef
