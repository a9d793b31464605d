// Copyright 2026 The udcodes Authors
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

#ifndef UDCODES_ERRORS_HPP_
#define UDCODES_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace udcodes {

// Malformed input text (words, length lists, flags).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive work would exceed the configured ceiling. Raised before any
// partial result is produced; a truncated enumeration is never returned.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No closed form is known for the requested length distribution.
class UncoveredFamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace udcodes

#endif  // UDCODES_ERRORS_HPP_
