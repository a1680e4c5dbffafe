// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any
// failure.

#include <iostream>

#include "dimon/verify.hpp"

int main() {
  dimon::VerifyOptions const options;
  bool ok = true;
  dimon::run_acceptance(options, [&](dimon::CriterionResult const& r) {
    std::cout << dimon::format_result_line(r) << std::endl;
    ok = ok && r.passed;
  });
  return ok ? 0 : 1;
}
