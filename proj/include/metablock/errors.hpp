#pragma once

#include <stdexcept>

namespace metablock {

// Caller passed something outside the documented domain (bad prime, exponent
// out of range, mismatched element/parameters).
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parameters are valid for the group but outside the scope of the requested
// closed form (e.g. a formula that needs l = m-1).
struct unsupported_parameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A brute-force enumeration would exceed the configured element cap.
struct oracle_cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A quantity the mathematics guarantees (divisibility, positivity, agreement
// of two routes) failed to hold. Always a bug, never a user error.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace metablock
