#pragma once

#include <stdexcept>
#include <string>

namespace mldmj {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct CharacteristicUnsupported : Error {
  using Error::Error;
};

// Two operands built over different characteristics met in one operation.
struct CharacteristicMismatch : Error {
  using Error::Error;
};

struct ZeroPolynomial : Error {
  using Error::Error;
};

struct DimensionTooLarge : Error {
  using Error::Error;
};

// A step/degree budget was exhausted. Carries how far the computation got so
// callers can report partial results instead of pretending nothing happened.
struct ResourceLimit : Error {
  explicit ResourceLimit(const std::string& what, long steps_used = -1)
      : Error(what), steps(steps_used) {}
  long steps;
};

struct PointNotOnVariety : Error {
  using Error::Error;
};

struct NormalizationFailed : Error {
  using Error::Error;
};

// A required linear change needs a root outside the ground field.
struct NonSplitInitialForm : Error {
  using Error::Error;
};

// A classification decision changed when the truncation degree was raised.
struct PrecisionInsufficient : Error {
  using Error::Error;
};

}  // namespace mldmj
