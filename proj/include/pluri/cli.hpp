#pragma once

#include "pluri/search.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pluri::cli {

enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,  // usage, parse and domain errors
    kViolations = 2,   // `verify` found counterexamples
};

/// kViolations when any report has a counterexample, else kOk.
int exit_code_for(const std::vector<VerifyReport>& reports);

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pluri::cli
