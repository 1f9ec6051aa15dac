// Copyright 2026 The Chaoslab Authors
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

#ifndef CHAOSLAB_ERRORS_HPP
#define CHAOSLAB_ERRORS_HPP

#include <stdexcept>

namespace chaoslab {

/// An index or block lies beyond the generated schedule prefix.
class prefix_exceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A witness construction needs schedule entries past the available prefix.
/// Extending the prefix and retrying is the expected response; this is not a
/// logic failure.
class prefix_too_short : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation exceeded a configured resource cap (vector support,
/// mantissa width, cache size).
class resource_limit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally invalid input: bad literal, bad JSON, inconsistent schedule
/// arrays, out-of-domain argument.
class malformed_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A 64-bit exponent computation overflowed.
class exponent_overflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace chaoslab

#endif  // CHAOSLAB_ERRORS_HPP
