#pragma once

#include <stdexcept>
#include <string>

namespace qcollapse {

/// Base class for all qcollapse errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configuration or argument violates a documented invariant.
struct ValidationError : Error {
  using Error::Error;
};

/// A config file (or other structured input) could not be parsed.
struct ParseError : Error {
  using Error::Error;
};

/// The unnormalized pattern integrates to (numerically) nothing on the
/// requested screen, so no probability density can be formed.
struct DegeneratePattern : Error {
  using Error::Error;
};

/// Fewer samples than the estimator requires.
struct TooFewSamples : Error {
  using Error::Error;
};

/// A sample position lies outside the screen.
struct OutOfRangeSample : Error {
  using Error::Error;
};

/// An iterative search exceeded its hard budget.
struct NonConvergent : Error {
  using Error::Error;
};

/// File or stream I/O failed.
struct IoError : Error {
  using Error::Error;
};

}  // namespace qcollapse
