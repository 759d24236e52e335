// Copyright 2026 The frlab Authors. All Rights Reserved.
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

#ifndef FRLAB_ERRORS_H_
#define FRLAB_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frlab {

// Precondition violated by the caller.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation not permitted in the object's current state (e.g. centering a
// sequence twice).
class InvalidState : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A computation would need more memory than the configured budget.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(const std::string& what, std::size_t required_bytes,
                std::size_t limit_bytes)
      : std::runtime_error(what),
        required_bytes_(required_bytes),
        limit_bytes_(limit_bytes) {}

  std::size_t required_bytes() const { return required_bytes_; }
  std::size_t limit_bytes() const { return limit_bytes_; }

 private:
  std::size_t required_bytes_;
  std::size_t limit_bytes_;
};

// A numeric self-check failed (e.g. the quadrature no longer reproduces the
// coefficient energy).
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace frlab

#endif  // FRLAB_ERRORS_H_
