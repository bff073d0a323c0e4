#ifndef REDWORDS_VERIFY_HPP
#define REDWORDS_VERIFY_HPP

#include <cstddef>
#include <iosfwd>

#include "redwords/words.hpp"

namespace redwords {

struct VerifyOptions {
  int max_n = 9;  // upper bound of the family sweep; stated checks use 9
  std::size_t budget = kDefaultWordBudget;
};

// Runs the full verification suite, one line per criterion, and returns true
// iff every criterion passed. Failures print FAIL with a short reason;
// exceptions inside a criterion are caught and reported as failures.
bool run_verification(const VerifyOptions& opts, std::ostream& out);

}  // namespace redwords

#endif
