#pragma once

#include <stdexcept>

namespace weylpert {

// Malformed user input: potential specs, CLI arguments, out-of-range requests.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// API misuse, e.g. conjugating with an unsolved generator.
struct UsageError : std::logic_error {
  using std::logic_error::logic_error;
};

// An off-diagonal monomial appeared that no generator of the requested
// algebra order can cancel; the truncation order was too small.
struct ClosureInsufficiencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace weylpert
