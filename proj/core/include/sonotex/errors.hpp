// Copyright 2026 The Sonotex Authors.
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

#ifndef SONOTEX_ERRORS_HPP_
#define SONOTEX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sonotex {

// Error categories map 1:1 onto the CLI exit codes.
enum class ErrorKind {
  config = 2,       // invalid parameters or configuration
  calibration = 3,  // calibration failed or profile/config mismatch
  io = 4,           // file system and format problems
  data = 5,         // numerically or structurally unusable data
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& m) : Error(ErrorKind::config, m) {}
};
struct CalibrationError : Error {
  explicit CalibrationError(const std::string& m)
      : Error(ErrorKind::calibration, m) {}
};
struct IoError : Error {
  explicit IoError(const std::string& m) : Error(ErrorKind::io, m) {}
};
struct DataError : Error {
  explicit DataError(const std::string& m) : Error(ErrorKind::data, m) {}
};

}  // namespace sonotex

#endif  // SONOTEX_ERRORS_HPP_
