#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dimon {

// Exit statuses of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitInvalidInput = 2;

// Runs one command; args excludes the program name.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace dimon
