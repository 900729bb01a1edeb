// Copyright 2026 The galelemke Authors.
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

#ifndef GALELEMKE_ERRORS_H_
#define GALELEMKE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace galelemke {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed caller input: wrong dimensions, out-of-range labels, odd
// dimension for a cyclic polytope, and so on.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Text input that could not be parsed. Line and column are 1-based; a column
// of 0 means the whole line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An enumeration or pivoting run would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A solver could not complete: cycling, a tie on a game that was certified
// nondegenerate, an exhausted support universe.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace galelemke

#endif  // GALELEMKE_ERRORS_H_
