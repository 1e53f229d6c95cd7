#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "symforge/graph.hpp"

namespace symforge::cli {

/// Exit-code contract of the command-line tool.
enum ExitCode : int {
    ok = 0,
    identity_failed = 1,
    parse_error = 2,
    method_disagreement = 3,
    precondition_violated = 4,
};

/// One checked identity instance, e.g. "matrix-tree L[2]".
struct InstanceResult {
    std::string suite;
    std::string instance;
    bool passed = false;
    std::string note;
};

/// Suite names accepted by `verify --suite`.
const std::vector<std::string>& suite_names();

/// Runs one named suite on one graph. Throws PreconditionError when the
/// graph does not meet the suite's preconditions.
std::vector<InstanceResult> run_suite(const FeynGraph& g, const std::string& suite);

/// Entry point: args[0] is the program name. Output goes to `out` unless
/// --output redirects it; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symforge::cli
