// include/sensepolar/error.hpp

// Copyright 2026 The sensepolar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace sensepolar {

/// Base of every error thrown by the library. The CLI maps each kind to an
/// exit code and prints what() on stderr.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input bytes (JSON syntax, binary layout). Carries the location.
class ParseError : public Error {
 public:
  ParseError(const std::string &what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line), column_(column) {}
  explicit ParseError(const std::string &what) : Error(what) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

/// Well-formed input that breaks a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Caller-side precondition failed (empty input, k out of range, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Shapes, dimensions or identifiers of two arguments disagree.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Iteration cap reached or a non-finite value appeared.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

/// Zero vector where a direction is required.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Operation not valid in the object's current state (e.g. no mean stored).
class StateError : public Error {
 public:
  using Error::Error;
};

/// Bad command-line usage.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace sensepolar
