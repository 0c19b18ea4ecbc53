// Copyright 2026 The tpcalc Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tpcalc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something malformed: bad syntax, ill-typed composition,
// shape mismatch, unknown semiring tag. The CLI maps these to exit code 2.
class UserError : public Error {
 public:
  using Error::Error;
};

class TagMismatchError : public UserError {
 public:
  using UserError::UserError;
};

// sub_one found no witness s with s + 1 = v.
class NotRepresentableError : public UserError {
 public:
  using UserError::UserError;
};

class TypeError : public UserError {
 public:
  using UserError::UserError;
};

class ShapeError : public UserError {
 public:
  using UserError::UserError;
};

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public UserError {
 public:
  ParseError(const std::string& message, SourceSpan span)
      : UserError(message + " at bytes " + std::to_string(span.start) + ".." +
                  std::to_string(span.end)),
        span_(span) {}

  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

// A library invariant failed; indicates a bug rather than bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace tpcalc
