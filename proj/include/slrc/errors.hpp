#pragma once

#include <stdexcept>
#include <string>

namespace slrc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: wrong lengths, negative exponents, zero coefficients.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A coefficient array was queried outside its domain of definition.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// The leading characteristic coefficient vanishes (q_r = 0); no canonical
/// continuation is produced for this case.
class DegenerateCase : public Error {
 public:
  using Error::Error;
};

/// Hypotheses of an exact completion result do not hold (e.g. the points are
/// not independent on the required index set).
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace slrc
