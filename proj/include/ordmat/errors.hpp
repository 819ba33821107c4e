// Copyright 2026 The Authors.
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

#ifndef ORDMAT_ERRORS_HPP
#define ORDMAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ordmat {

// Malformed arguments: out-of-range ids, length mismatches, unsuitable bounds.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The instance is well formed but the requested problem has no answer
// (e.g. a rank-0 matroid where a basis with r > 0 is required).
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A hard size or iteration cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ordmat

#endif  // ORDMAT_ERRORS_HPP
