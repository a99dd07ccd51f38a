// Copyright 2026 The Orbent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbent {

/// Base class for all orbent errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (FCIDUMP, model strings, analysis documents).
/// Carries the 1-based line number when one is known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Semantically invalid input: bad particle sector, mismatched
/// basis/table, out-of-range index, schema violation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Internal precondition violated by the caller (programming error).
class LogicError : public Error {
 public:
  using Error::Error;
};

/// A requested object exceeds a configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Iterative solver failed to reach the requested residual tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_residual,
                   std::size_t iterations)
      : Error(what), best_residual_(best_residual), iterations_(iterations) {}
  double best_residual() const noexcept { return best_residual_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double best_residual_;
  std::size_t iterations_;
};

/// Numerical quantity fell outside its physically admissible range
/// (e.g. an RDM eigenvalue below -1e-10).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// File or stream I/O failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace orbent
