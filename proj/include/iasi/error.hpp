// Copyright 2026 The iasi Authors
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

namespace iasi {

// Base for every error raised by the library. A labeling that fails to be an
// IASI is not an error; it is reported through VerificationReport.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element or sum would exceed the configured universe bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// Empty set passed where a non-empty label is required.
class EmptySet : public Error {
 public:
  using Error::Error;
};

// Malformed text input (set literal, edge list, labeling file).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  // 1-based; 0 when the input has no line structure.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Structural violation: unknown vertex/edge, loop, duplicate edge, labeling
// that does not cover the graph, failed transform precondition.
class GraphError : public Error {
 public:
  using Error::Error;
};

// Invalid search or corpus configuration.
class SpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace iasi
