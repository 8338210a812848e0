// Copyright 2026 The Neurometry Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef NEUROMETRY_ERROR_HPP_
#define NEUROMETRY_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace neurometry {

/// Base error for all failures raised by this library. The message always
/// carries enough context (path, instance id, field name) to act on.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Unreadable / malformed input file or document.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// A precondition on operand shapes or values was violated.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

}  // namespace neurometry

#endif  // NEUROMETRY_ERROR_HPP_
