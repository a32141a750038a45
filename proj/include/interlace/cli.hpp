#pragma once

// Command-line front end. run() is the testable core; main() only forwards
// argv.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace interlace::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 1,  // bad flags, unreadable file, failed precondition
    parse_error = 2,
    cap_exceeded = 3,
    verification_failed = 4,
};

struct RunConfig {
    std::string input;                   // path, or "-" for stdin
    std::string format = "edgelist";     // edgelist | json | dow
    std::string kind = "qlambda";        // qlambda | q2 | qn | q | Qahv | courcelle | pi | pi-directed
    std::string method = "recursive";    // bruteforce | recursive | reduce
    std::vector<std::string> bindings;   // "var=rational"
    std::size_t s_max = 4;
    std::string output = "text";         // text | json
    bool verify = false;
    std::optional<std::string> labels;   // graph JSON whose labels override the input's
};

/// Runs one configuration. The result goes to `out`; timing and error
/// messages go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace interlace::cli
