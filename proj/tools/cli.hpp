#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chtg::cli {

enum ExitCode : int {
    kOk = 0,
    /// A certificate or a regular elliptic hit was found.
    kHit = 2,
    kUsage = 64,
    kDomain = 65,
};

/// Runs the chtg command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace chtg::cli
