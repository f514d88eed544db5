#pragma once

#include <stdexcept>
#include <string>

namespace ksphere {

/// Rejected user input: malformed specs, invalid permutations, order cap.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An exact-arithmetic invariant failed (non-integral multiplicity, a class
/// eigenspace that would not split, ...). Always a bug or corrupted data.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace ksphere
