// Runs the full verification suite at its stated ranges and exits nonzero on
// any failing criterion; one PASS/FAIL line each.
#include <iostream>

#include "redwords/verify.hpp"

int main() {
  redwords::VerifyOptions opts;  // stated ranges: family sweep to n = 9
  const bool ok = redwords::run_verification(opts, std::cout);
  return ok ? 0 : 1;
}
