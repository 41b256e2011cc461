#pragma once

#include <string>
#include <vector>

namespace divisum::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kUsageError = 2,        // bad arguments or unparsable expression
    kNotSummable = 3,       // not ⊗-summable, and the ⊛ search was structurally exhausted
    kBoundTooSmall = 4,     // ⊛ search bound below the pole order
    kNotInClass = 5,        // H outside the admitted demo pattern
};

struct CliOutput {
    int exit_code = kOk;
    std::string out;  // data channel
    std::string err;  // diagnostics
};

/// Runs one command. `args` excludes the program name.
CliOutput run(const std::vector<std::string>& args);

}  // namespace divisum::cli
