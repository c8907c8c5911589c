#pragma once

#include <stdexcept>

namespace palinseq {

// A stated precondition of an operation does not hold for the given input.
class PreconditionFailed : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A scan exhausted a bound that is mathematically guaranteed to contain a
// failure. This always indicates an implementation bug, never a result.
class TheoryViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace palinseq
