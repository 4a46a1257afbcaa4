// Copyright 2026 The nilcay Authors
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

#ifndef NILCAY_ERRORS_HPP_
#define NILCAY_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilcay {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Presentation text does not follow the grammar. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Declarations that parse but describe an unusable presentation.
class InvalidPresentation : public Error {
 public:
  using Error::Error;
};

// Collection ran out of rewrite steps.
class CollectionError : public Error {
 public:
  using Error::Error;
};

// A ball or search grew past its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace nilcay

#endif  // NILCAY_ERRORS_HPP_
