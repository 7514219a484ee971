#pragma once

#include <stdexcept>
#include <string>

namespace rz {

// Invalid arguments or malformed configuration (CLI exit code 2).
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation: u-range
// violations, degenerate parameters, poles on the evaluation grid
// (CLI exit code 3).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A refinement or series failed to reach the requested tolerance
// within its cap (CLI exit code 4).
struct accuracy_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation applied to an object in the wrong state, e.g. flip-flop
// conversion of a coin that is already F-type.
struct state_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rz
