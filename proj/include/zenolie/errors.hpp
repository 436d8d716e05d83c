// Copyright 2026 The Zenolie Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace zenolie {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree on qubit count or matrix dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on an argument does not hold.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A dense expansion would exceed the configured qubit cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// The master-equation integrator lost trace or diverged.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

/// Malformed operator file or projector specifier; carries a 1-based line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}

  std::size_t line() const noexcept { return line_; }
  /// The message without the line prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

}  // namespace zenolie
