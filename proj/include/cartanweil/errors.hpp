#pragma once

#include <stdexcept>
#include <string>

namespace cw {

/// Array shapes disagree with the declared dimension.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnknownAlgebra : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedAlgebra : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A tensor handed to InvariantPolynomial fails ad-invariance.
struct NotInvariant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegreeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// A derivation has no rule for a generator occurring in its argument.
struct MissingAction : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An element contains generators outside the model an operation works in.
struct ForeignGenerator : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnassignedGenerator : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OddGeneratorError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotBasic : std::domain_error {
  using std::domain_error::domain_error;
};

/// An internal consistency check failed (exit code 3 at the CLI).
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace cw
