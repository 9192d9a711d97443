// Copyright 2026 The cylpath Authors
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

#ifndef CYLPATH_ERRORS_HPP_
#define CYLPATH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cylpath {

// A computation needed simplices above the dimension to which some object
// is faithfully stored. `required` is the dimension that would have been
// needed, `available` what the object (or policy) provides.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int required, int available)
      : std::runtime_error(what + " (requires dimension " +
                           std::to_string(required) + ", available " +
                           std::to_string(available) + ")"),
        required_(required),
        available_(available) {}

  int required() const { return required_; }
  int available() const { return available_; }

 private:
  int required_;
  int available_;
};

// Maps composed or compared across objects that do not line up.
class DomainMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A structure was asked for its phi or psi at an object outside its probe
// set.
class ProbeMissing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cylpath

#endif  // CYLPATH_ERRORS_HPP_
