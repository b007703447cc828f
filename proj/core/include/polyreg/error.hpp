#pragma once

#include <stdexcept>

namespace polyreg {

// Malformed user input: bad cycle text, bad polygon file, violated precondition.
struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A polygon whose diagonals are not generic (three chords through one point).
struct NonGeneric : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rejection sampling ran out of attempts.
struct RetryExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace polyreg
