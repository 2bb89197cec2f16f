#pragma once

#include <stdexcept>
#include <string>

namespace colorpart {

// Bad input from a caller: malformed colors, out-of-range indices, a
// partition outside the ground set an operation requires.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A cross-check between two independent computations disagreed, or a
// machine broke an invariant it should maintain. Always a bug.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace colorpart
