#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surfchem {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A rate law was applied to a reaction of the wrong kind.
struct KindMismatchError : Error {
  using Error::Error;
};

/// An argument left the physical domain (T <= 0, negative pressure, ...).
struct DomainError : Error {
  using Error::Error;
};

/// The site-balance root finder could not bracket or converge.
/// Carries the balance residuals at the last bracketing endpoints.
struct SolverFailureError : Error {
  SolverFailureError(const std::string& what, double lo, double hi)
      : Error(what), residual_lo(lo), residual_hi(hi) {}
  double residual_lo;
  double residual_hi;
};

/// Placeholder consumption rate is zero while placeholder adsorption is not.
struct SingularPlaceholderError : Error {
  using Error::Error;
};

/// All species densities vanish, mole fractions are undefined.
struct DegenerateMixtureError : Error {
  using Error::Error;
};

/// Malformed input file. line/column are 1-based; column counts CSV fields.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", field " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

/// Pointwise loss is undefined because the reference flux is not positive.
struct DegenerateSigmaError : Error {
  using Error::Error;
};

/// Regression design matrix is rank deficient.
struct CollinearDesignError : Error {
  using Error::Error;
};

/// Covariance factorization failed even after jitter escalation.
struct FactorizationError : Error {
  using Error::Error;
};

/// Quantity-of-interest denominator is not positive.
struct DegenerateQoiError : Error {
  using Error::Error;
};

/// A file could not be opened, read, or written.
struct IoError : Error {
  using Error::Error;
};

/// The calibration stage could not produce a usable model.
struct CalibrationError : Error {
  using Error::Error;
};

}  // namespace surfchem
