// Copyright 2026 The proxbp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROXBP_ERRORS_HPP_
#define PROXBP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace proxbp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Well-formed input that violates a model invariant (dangling reference,
// nonpositive capacity, disconnected path, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A caller broke a documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// A utility was evaluated outside its domain.
class DomainError : public ContractError {
 public:
  using ContractError::ContractError;
};

// An iterative solver failed to converge or bracket.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace proxbp

#endif  // PROXBP_ERRORS_HPP_
