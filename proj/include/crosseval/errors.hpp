// Copyright 2026 The crosseval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CROSSEVAL_ERRORS_HPP_
#define CROSSEVAL_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crosseval {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A score subset is empty (or a store has no subsets of one class).
class EmptySubsetError : public Error {
 public:
  explicit EmptySubsetError(const std::string& subset_id)
      : Error(subset_id.empty() ? std::string("empty score subset")
                                : "empty score subset '" + subset_id + "'"),
        subset_id_(subset_id) {}

  const std::string& subset_id() const { return subset_id_; }

 private:
  std::string subset_id_;
};

/// A score is NaN or infinite.
class NonFiniteScoreError : public Error {
 public:
  explicit NonFiniteScoreError(const std::string& what) : Error(what) {}
};

/// Malformed input text (score file, manifest, config, matrix JSON).
/// Carries the 1-based line number when one is known; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A request violates an operation precondition (bad weights, unknown
/// subset id, invalid simulation spec, inconsistent run configuration).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Filesystem-level failure: unreadable input, unwritable output.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace crosseval

#endif  // CROSSEVAL_ERRORS_HPP_
