// Copyright 2026 the ILTT toolkit authors
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

#ifndef ILTT_ERRORS_HPP_
#define ILTT_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace iltt {

// Process exit codes used by the CLI. Library errors map onto these.
enum class ExitCode : int {
  kOk = 0,
  kDomain = 1,
  kCapacity = 2,
  kNumerical = 3,
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual ExitCode exit_code() const { return ExitCode::kDomain; }
};

// Invalid argument, selection, order, or any other contract violation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The request would exceed a configured size cap. Carries the smallest cap
// that would let the request through, so callers can retry with --cap.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::uint64_t required_cap)
      : Error(what), required_cap_(required_cap) {}
  ExitCode exit_code() const override { return ExitCode::kCapacity; }
  std::uint64_t required_cap() const { return required_cap_; }

 private:
  std::uint64_t required_cap_;
};

// An iterative numerical method failed to converge within its budget.
class NumericalError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kNumerical; }
};

// Malformed input file. Line numbers are 1-based; 0 means "end of input".
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : DomainError(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace iltt

#endif  // ILTT_ERRORS_HPP_
