// Copyright 2026 The z2z4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef Z2Z4_ERRORS_HPP
#define Z2Z4_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace z2z4 {

// All library failures derive from Error. kind() is the machine-readable tag
// printed by the CLI ("DomainError", "CapacityError", ...).
class Error : public std::runtime_error {
 public:
  Error(const char* kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  const char* kind() const noexcept { return kind_; }

 private:
  const char* kind_;
};

// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("DomainError", what) {}
};

// Request exceeds a configured desk-scale bound.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error("CapacityError", what) {}
};

// A mathematical hypothesis required by the operation does not hold.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error("PreconditionError", what) {}
};

// Broken internal contract; indicates a bug, never bad input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error("InternalError", what) {}
};

}  // namespace z2z4

#endif  // Z2Z4_ERRORS_HPP
