#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skewmm::cli {

/// Process exit codes; a stable contract for scripts.
enum ExitCode : int {
    kOk = 0,              // success, or "equal" from verify
    kUsage = 2,           // bad flags or argument values
    kNotEqual = 3,        // verify said "not equal", or mul --check found a mismatch
    kSelftestFailed = 4,
    kIoError = 5,
    kFormatError = 6,
};

/// Runs the tool with args excluding the program name. Matrix output goes to
/// `out` when no -o is given; diagnostics and reports go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelftestOutcome {
    bool passed = true;
    std::string first_failure;
};

/// Runs the invariant suite over p in {3, 5, 7, 11, 13}, writing a summary to `log`.
SelftestOutcome run_selftest(std::ostream& log);

}  // namespace skewmm::cli
