#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpretzel {

enum ExitCode { kExitOk = 0, kExitDomain = 1, kExitUsage = 2, kExitVerify = 3 };

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpretzel
