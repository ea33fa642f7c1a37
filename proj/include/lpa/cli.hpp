#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpa::cli {

enum ExitCode : int {
    kOk = 0,
    kPropertyFailure = 1,
    kParseError = 2,
    kSemanticError = 3,
    kResourceCutoff = 4,
};

// Caps for `verify`.
inline constexpr std::size_t kMaxVerifyVertices = 8;
inline constexpr std::size_t kMaxVerifyEdges = 16;

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpa::cli
