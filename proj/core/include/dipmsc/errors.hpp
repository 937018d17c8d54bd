// Copyright 2026 The dipmsc Authors.
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

#include <stdexcept>
#include <string>
#include <vector>

namespace dipmsc {

/// Base of every library error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Errors caused by bad inputs or configuration; the CLI maps these to
/// exit code 1. Everything else maps to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class ShapeError : public InputError {
 public:
  using InputError::InputError;
};

class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

class WindowError : public InputError {
 public:
  using InputError::InputError;
};

class SpecError : public InputError {
 public:
  using InputError::InputError;
};

/// One or more entities have an all-zero dimension row. Carries the
/// offending entity ids so callers can report them by name.
class DegenerateEntityError : public InputError {
 public:
  explicit DegenerateEntityError(const std::string& msg,
                                 std::vector<std::string> entities = {})
      : InputError(msg), entities_(std::move(entities)) {}
  const std::vector<std::string>& entities() const { return entities_; }

 private:
  std::vector<std::string> entities_;
};

class ShiftError : public Error {
 public:
  using Error::Error;
};

class DegenerateRowError : public Error {
 public:
  using Error::Error;
};

class EmptyClusterError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class SplitError : public Error {
 public:
  using Error::Error;
};

class SampleSizeError : public Error {
 public:
  using Error::Error;
};

class NoEventsError : public Error {
 public:
  using Error::Error;
};

class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

class EmptySampleError : public Error {
 public:
  using Error::Error;
};

}  // namespace dipmsc
